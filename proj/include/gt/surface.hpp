#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gt/rational.hpp"
#include "gt/word.hpp"

namespace gt {

enum class EdgeEnd { Start, End };

struct HalfEdge {
  int gen = 0;
  EdgeEnd end = EdgeEnd::Start;
  bool operator==(const HalfEdge&) const = default;
};

// One-vertex ribbon graph for a genus-g surface with n+1 punctures.
// Generators are indexed x1,y1,...,xg,yg,z1,...,zn.
//
// Half-edges at the vertex, counterclockwise from slot 0:
//   zn.end zn.start ... z1.end z1.start  yg.s xg.e yg.e xg.s ... y1.s x1.e y1.e x1.s
// Faces are traced by "arrive at slot h, leave through slot h-1".  With this
// order face 0 reads x1 y1 X1 Y1 ... xg yg Xg Yg z1 ... zn and face j reads Zj.
class Surface {
 public:
  static Surface build(int g, int n);

  int genus() const { return g_; }
  int n() const { return n_; }
  int puncture_count() const { return n_ + 1; }
  int rank() const { return 2 * g_ + n_; }
  int slot_count() const { return 2 * rank(); }

  int x(int i) const { return 2 * (i - 1); }
  int y(int i) const { return 2 * (i - 1) + 1; }
  int z(int j) const { return 2 * g_ + j - 1; }
  bool is_handle(int gen) const { return gen < 2 * g_; }

  const std::string& generator_name(int gen) const { return names_.at(gen); }
  const std::vector<std::string>& generator_names() const { return names_; }

  int start_slot(int gen) const { return start_[gen]; }
  int end_slot(int gen) const { return end_[gen]; }
  int out_slot(Letter l) const { return l.inverse ? end_[l.gen] : start_[l.gen]; }
  int in_slot(Letter l) const { return l.inverse ? start_[l.gen] : end_[l.gen]; }

  const std::vector<HalfEdge>& half_edge_order() const { return order_; }
  // Attachment angle of a slot, in turns.
  Rational drawing_angle(int slot) const {
    Rational a(slot, slot_count());
    a.canonicalize();
    return a;
  }

  const std::vector<CyclicWord>& boundary_words() const { return boundary_; }
  // Linear representative of face j starting at its first traced corner.
  const Word& boundary_based(int j) const { return boundary_based_.at(j); }

  Letter parse_letter(std::string_view token) const;
  Word parse_word(std::string_view text) const;
  std::string format_letter(Letter l) const;
  std::string format_word(std::span<const Letter> w) const;
  std::string format(const CyclicWord& w) const { return format_word(w.letters()); }
  CyclicWord parse_cyclic(std::string_view text) const {
    return CyclicWord::from_letters(parse_word(text));
  }

  bool operator==(const Surface& o) const { return g_ == o.g_ && n_ == o.n_; }

 private:
  int g_ = 0;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<int> start_, end_;
  std::vector<HalfEdge> order_;
  std::vector<CyclicWord> boundary_;
  std::vector<Word> boundary_based_;
};

inline Surface build_surface(int g, int n) { return Surface::build(g, n); }
inline const std::vector<CyclicWord>& boundary_words(const Surface& s) {
  return s.boundary_words();
}

// Throws SurfaceMismatch.
void require_same_surface(const Surface& a, const Surface& b);

}  // namespace gt
