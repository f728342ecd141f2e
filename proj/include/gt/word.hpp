#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gt {

// A generator or its inverse. Ordered x1 < X1 < y1 < Y1 < ... < z1 < Z1 < ...
struct Letter {
  int gen = 0;
  bool inverse = false;

  Letter inv() const { return Letter{gen, !inverse}; }
  int key() const { return 2 * gen + (inverse ? 1 : 0); }
  int sign() const { return inverse ? -1 : 1; }
  auto operator<=>(const Letter&) const = default;
};

// A based (linear) word.
using Word = std::vector<Letter>;

Word free_reduce(std::span<const Letter> letters);
Word inverse_word(std::span<const Letter> w);
Word concat(std::span<const Letter> a, std::span<const Letter> b);
Word power(std::span<const Letter> w, int k);

// Smallest p > 0 with w invariant under rotation by p (w nonempty).
std::size_t primitive_period(std::span<const Letter> w);

// Index of the least rotation of w.
std::size_t least_rotation(std::span<const Letter> w);

// Free homotopy class: cyclically reduced, stored as least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  static CyclicWord from_letters(std::span<const Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  CyclicWord inverse() const;
  CyclicWord pow(int k) const;

  auto operator<=>(const CyclicWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Cyclically reduce a sequence read cyclically, without canonical rotation.
Word cyclic_reduce_raw(std::span<const Letter> letters);

std::vector<int> homology_vector(int rank, std::span<const Letter> w);

struct CyclicWordHash {
  std::size_t operator()(const CyclicWord& w) const noexcept;
};

}  // namespace gt
