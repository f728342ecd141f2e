#include "gt/series.hpp"

#include <algorithm>

#include "gt/error.hpp"

namespace gt {

WeightTable::WeightTable(int genus, int n) {
  weights_.assign(2 * genus, 1);
  weights_.insert(weights_.end(), n, 2);
}

int WeightTable::of(const Monomial& m) const {
  int w = 0;
  for (int g : m) w += weights_.at(g);
  return w;
}

Series::Series(WeightTable w, int N) : w_(std::move(w)), N_(N), comps_(N + 1) {}

Series Series::unit(WeightTable w, int N) {
  Series s(std::move(w), N);
  s.add({}, 1);
  return s;
}

Series Series::letter(WeightTable w, int N, int gen) {
  Series s(std::move(w), N);
  s.add({gen}, 1);
  return s;
}

void Series::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  const int wt = w_.of(m);
  if (wt > N_) return;
  auto& comp = comps_[wt];
  auto [it, fresh] = comp.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) comp.erase(it);
}

Rational Series::coefficient(const Monomial& m) const {
  const int wt = w_.of(m);
  if (wt > N_) return 0;
  auto it = comps_[wt].find(m);
  return it == comps_[wt].end() ? Rational(0) : it->second;
}

bool Series::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Component& c) { return c.empty(); });
}

Series Series::homogeneous(int weight) const {
  Series out(w_, N_);
  if (weight >= 0 && weight <= N_) out.comps_[weight] = comps_[weight];
  return out;
}

Series Series::truncated(int N) const {
  Series out(w_, N);
  for (int k = 0; k <= std::min(N, N_); ++k) out.comps_[k] = comps_[k];
  return out;
}

Series& Series::operator+=(const Series& o) {
  if (!(w_ == o.w_) || N_ != o.N_) throw InternalError("series shapes differ");
  for (const Component& c : o.comps_)
    for (const auto& [m, v] : c) add(m, v);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (!(w_ == o.w_) || N_ != o.N_) throw InternalError("series shapes differ");
  for (const Component& c : o.comps_)
    for (const auto& [m, v] : c) add(m, -v);
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (Component& comp : comps_) {
    if (c == 0) {
      comp.clear();
      continue;
    }
    for (auto& [m, v] : comp) v *= c;
  }
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  if (!(a.w_ == b.w_) || a.N_ != b.N_) throw InternalError("series shapes differ");
  Series out(a.w_, a.N_);
  Monomial m;
  for (int wa = 0; wa <= a.N_; ++wa)
    for (int wb = 0; wa + wb <= a.N_; ++wb)
      for (const auto& [ma, ca] : a.comps_[wa])
        for (const auto& [mb, cb] : b.comps_[wb]) {
          m = ma;
          m.insert(m.end(), mb.begin(), mb.end());
          out.add(m, ca * cb);
        }
  return out;
}

Series commutator(const Series& a, const Series& b) { return a * b - b * a; }

namespace {

void require_constant(const Series& s, const Rational& c, const char* what) {
  if (s.coefficient({}) != c) throw InternalError(what);
}

}  // namespace

Series series_exp(const Series& s) {
  require_constant(s, 0, "exp needs a series without constant term");
  Series out = Series::unit(s.weights(), s.truncation());
  Series term = out;
  for (int k = 1; k <= s.truncation(); ++k) {
    term = term * s;
    term *= Rational(1, k);
    out += term;
  }
  return out;
}

Series series_log(const Series& s) {
  require_constant(s, 1, "log needs constant term 1");
  const Series x = s - Series::unit(s.weights(), s.truncation());
  Series out(s.weights(), s.truncation());
  Series power = x;
  for (int k = 1; k <= s.truncation(); ++k) {
    Series t = power;
    t *= Rational(k % 2 == 1 ? 1 : -1, k);
    out += t;
    power = power * x;
  }
  return out;
}

Series series_inverse(const Series& s) {
  require_constant(s, 1, "inverse needs constant term 1");
  const Series x = s - Series::unit(s.weights(), s.truncation());
  Series out = Series::unit(s.weights(), s.truncation());
  Series power = Series::unit(s.weights(), s.truncation());
  for (int k = 1; k <= s.truncation(); ++k) {
    power = power * x;
    Series t = power;
    if (k % 2 == 1) t *= -1;
    out += t;
  }
  return out;
}

std::optional<int> weight_level(const Series& s) {
  for (int k = 0; k <= s.truncation(); ++k)
    if (!s.component(k).empty()) return k;
  return std::nullopt;
}

Monomial cyclic_canonical(const Monomial& m) {
  if (m.empty()) return m;
  Monomial best = m, cur = m;
  for (std::size_t r = 1; r < m.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

CyclicSeries::CyclicSeries(WeightTable w, int N) : w_(std::move(w)), N_(N), comps_(N + 1) {}

void CyclicSeries::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  const int wt = w_.of(m);
  if (wt > N_) return;
  auto& comp = comps_[wt];
  auto [it, fresh] = comp.try_emplace(cyclic_canonical(m), c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) comp.erase(it);
}

CyclicSeries CyclicSeries::project(const Series& s) {
  CyclicSeries out(s.weights(), s.truncation());
  for (const auto& comp : s.components())
    for (const auto& [m, c] : comp) out.add(m, c);
  return out;
}

bool CyclicSeries::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const auto& c) { return c.empty(); });
}

CyclicSeries& CyclicSeries::operator+=(const CyclicSeries& o) {
  if (!(w_ == o.w_) || N_ != o.N_) throw InternalError("series shapes differ");
  for (const auto& comp : o.comps_)
    for (const auto& [m, v] : comp) add(m, v);
  return *this;
}

CyclicSeries& CyclicSeries::operator*=(const Rational& c) {
  for (auto& comp : comps_) {
    if (c == 0) {
      comp.clear();
      continue;
    }
    for (auto& [m, v] : comp) v *= c;
  }
  return *this;
}

std::optional<int> weight_level(const CyclicSeries& s) {
  for (int k = 0; k <= s.truncation(); ++k)
    if (!s.components()[k].empty()) return k;
  return std::nullopt;
}

}  // namespace gt
