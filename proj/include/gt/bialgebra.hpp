#pragma once

#include <map>
#include <utility>

#include "gt/loops.hpp"
#include "gt/rational.hpp"

namespace gt {

// Sparse rational combination of free homotopy classes; "1" is a basis element.
class LoopCombo {
 public:
  using Map = std::map<CyclicWord, Rational>;

  LoopCombo() = default;
  static LoopCombo single(const CyclicWord& w, const Rational& c = 1);

  void add(const CyclicWord& w, const Rational& c);
  Rational coefficient(const CyclicWord& w) const;
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LoopCombo& operator+=(const LoopCombo& o);
  LoopCombo& operator-=(const LoopCombo& o);
  LoopCombo& operator*=(const Rational& c);
  friend LoopCombo operator+(LoopCombo a, const LoopCombo& b) { return a += b; }
  friend LoopCombo operator-(LoopCombo a, const LoopCombo& b) { return a -= b; }
  friend LoopCombo operator*(const Rational& c, LoopCombo a) { return a *= c; }
  bool operator==(const LoopCombo& o) const { return terms_ == o.terms_; }

 private:
  Map terms_;
};

// Sparse rational combination of ordered pairs of classes.
class BiLoopCombo {
 public:
  using Key = std::pair<CyclicWord, CyclicWord>;
  using Map = std::map<Key, Rational>;

  void add(const CyclicWord& l, const CyclicWord& r, const Rational& c);
  Rational coefficient(const CyclicWord& l, const CyclicWord& r) const;
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BiLoopCombo swapped() const;
  // u⊗v ↦ u⊗v − v⊗u
  BiLoopCombo wedge() const;

  BiLoopCombo& operator+=(const BiLoopCombo& o);
  BiLoopCombo& operator-=(const BiLoopCombo& o);
  BiLoopCombo& operator*=(const Rational& c);
  friend BiLoopCombo operator+(BiLoopCombo a, const BiLoopCombo& b) { return a += b; }
  friend BiLoopCombo operator-(BiLoopCombo a, const BiLoopCombo& b) { return a -= b; }
  friend BiLoopCombo operator*(const Rational& c, BiLoopCombo a) { return a *= c; }
  bool operator==(const BiLoopCombo& o) const { return terms_ == o.terms_; }

 private:
  Map terms_;
};

// Sign in front of rot(w)(w⊗1 − 1⊗w); fixed by requiring that an inserted
// kink leaves the cobracket unchanged.
inline constexpr int kRotationCorrectionSign = -1;

LoopCombo goldman_bracket(const Surface& s, const LoopCombo& a, const LoopCombo& b,
                          unsigned threads = 1);
LoopCombo goldman_bracket(const Surface& s, const CyclicWord& u, const CyclicWord& v);

BiLoopCombo turaev_cobracket(const Framing& xi, const LoopCombo& a);
BiLoopCombo turaev_cobracket(const Framing& xi, const CyclicWord& w);
// Evaluates the defining sum on an explicitly kinked representative.
BiLoopCombo turaev_cobracket(const Framing& xi, const KinkedLoop& w);

BiLoopCombo unframed_cobracket(const Surface& s, const LoopCombo& a);

// x·(u⊗v) = {x,u}⊗v + u⊗{x,v}
BiLoopCombo bracket_action(const Surface& s, const LoopCombo& x, const BiLoopCombo& t);
// u⊗v ↦ {u,v}
LoopCombo bracket_contract(const Surface& s, const BiLoopCombo& t);

}  // namespace gt
