#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gt/bialgebra.hpp"
#include "gt/loops.hpp"
#include "gt/series.hpp"
#include "gt/surface.hpp"

namespace gt {

WeightTable weight_table(const Surface& s);
// Printable name of a series letter: X1, Y1, Z1, ...
std::string series_letter_name(const Surface& s, int gen);

// Multiplicative map from the free group into truncated series.
class Expansion {
 public:
  // Images must be group-like with the expected leading letter; throws NotDefined.
  static Expansion from_images(const Surface& s, int N, std::vector<Series> images);

  const Surface& surface() const { return s_; }
  int truncation() const { return N_; }
  const Series& image(int gen) const { return images_.at(gen); }
  const Series& image(Letter l) const { return l.inverse ? inverses_.at(l.gen) : images_.at(l.gen); }

 private:
  Surface s_;
  int N_ = 0;
  std::vector<Series> images_, inverses_;
};

Expansion exp_expansion(const Surface& s, int N);
// exp expansion with the last puncture generator corrected so that the outer
// boundary maps to exp(sum [X_i,Y_i] + sum Z_j) exactly.  Needs n >= 1.
Expansion boundary_adapted_expansion(const Surface& s, int N);

Series expand_word(const Expansion& th, std::span<const Letter> w);
CyclicSeries expand_loop(const Expansion& th, const CyclicWord& w);
CyclicSeries expand_loop(const Expansion& th, const LoopCombo& a);

// Weight-graded tensor square of the cyclic quotient, truncated at total weight N.
struct CyclicTensor {
  int N = 0;
  std::map<std::pair<Monomial, Monomial>, Rational> terms;
  void add(const Monomial& l, const Monomial& r, const Rational& c);
};
CyclicTensor expand_pair(const Expansion& th, const BiLoopCombo& t);
std::optional<int> weight_level(const CyclicTensor& t, const WeightTable& w);

struct BoundaryDefect {
  Series defect;          // log of the outer boundary minus its weight-2 part
  Series weight2;         // that weight-2 part
  bool weight2_ok = true; // weight2 == sum [X_i,Y_i] + sum Z_j
};
BoundaryDefect boundary_defect(const Expansion& th);
Series boundary_log_target(const Surface& s, int N);

Rational augmentation(const LoopCombo& a);

struct WeightCount {
  int weight = 0;
  std::size_t terms = 0;
};

struct FiltrationReport {
  std::optional<int> p, q;
  std::optional<int> bracket_level;
  std::optional<int> bracket_bound;  // p + q - 2; nullopt when p or q is infinite
  bool bracket_ok = true;
  std::optional<int> cobracket_level;
  std::optional<int> cobracket_bound;
  bool cobracket_ok = true;
  std::vector<WeightCount> bracket_excess;    // nonzero weights above the bound
  std::vector<WeightCount> cobracket_excess;
  bool boundary_ok = true;
};

FiltrationReport filtration_report(const Expansion& th, const Framing& xi, const LoopCombo& a,
                                   const LoopCombo& b);

}  // namespace gt
