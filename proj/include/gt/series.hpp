#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gt/rational.hpp"

namespace gt {

// Noncommutative monomial in the letters X_i, Y_i, Z_j (by generator index).
using Monomial = std::vector<int>;

// Letter weights: handle letters 1, puncture letters 2.
class WeightTable {
 public:
  WeightTable() = default;
  WeightTable(int genus, int n);
  int of(int gen) const { return weights_.at(gen); }
  int of(const Monomial& m) const;
  int rank() const { return static_cast<int>(weights_.size()); }
  bool operator==(const WeightTable&) const = default;

 private:
  std::vector<int> weights_;
};

// Truncated series: all monomials of weight <= N, bucketed by weight.
class Series {
 public:
  using Component = std::map<Monomial, Rational>;

  Series() = default;
  Series(WeightTable w, int N);
  static Series unit(WeightTable w, int N);
  static Series letter(WeightTable w, int N, int gen);

  int truncation() const { return N_; }
  const WeightTable& weights() const { return w_; }
  const Component& component(int weight) const { return comps_.at(weight); }
  const std::vector<Component>& components() const { return comps_; }

  void add(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;
  bool is_zero() const;
  Series homogeneous(int weight) const;
  Series truncated(int N) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }
  friend Series operator*(const Series& a, const Series& b);
  bool operator==(const Series& o) const { return N_ == o.N_ && comps_ == o.comps_; }

 private:
  WeightTable w_;
  int N_ = 0;
  std::vector<Component> comps_;
};

Series commutator(const Series& a, const Series& b);
// exp of a series without constant term.
Series series_exp(const Series& s);
// log of a series with constant term 1.
Series series_log(const Series& s);
// inverse of a series with constant term 1.
Series series_inverse(const Series& s);

// Smallest weight carrying a nonzero coefficient; nullopt for zero.
std::optional<int> weight_level(const Series& s);

// Series modulo cyclic permutation of monomials (least rotation kept).
class CyclicSeries {
 public:
  CyclicSeries() = default;
  CyclicSeries(WeightTable w, int N);
  static CyclicSeries project(const Series& s);

  int truncation() const { return N_; }
  const WeightTable& weights() const { return w_; }
  const std::vector<Series::Component>& components() const { return comps_; }
  void add(const Monomial& m, const Rational& c);  // m is canonicalised
  bool is_zero() const;

  CyclicSeries& operator+=(const CyclicSeries& o);
  CyclicSeries& operator*=(const Rational& c);
  friend CyclicSeries operator+(CyclicSeries a, const CyclicSeries& b) { return a += b; }
  bool operator==(const CyclicSeries& o) const { return N_ == o.N_ && comps_ == o.comps_; }

 private:
  WeightTable w_;
  int N_ = 0;
  std::vector<Series::Component> comps_;
};

Monomial cyclic_canonical(const Monomial& m);
std::optional<int> weight_level(const CyclicSeries& s);

}  // namespace gt
