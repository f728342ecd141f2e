#include "gt/bialgebra.hpp"

#include <thread>
#include <vector>

namespace gt {

LoopCombo LoopCombo::single(const CyclicWord& w, const Rational& c) {
  LoopCombo a;
  a.add(w, c);
  return a;
}

void LoopCombo::add(const CyclicWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational LoopCombo::coefficient(const CyclicWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

LoopCombo& LoopCombo::operator+=(const LoopCombo& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

LoopCombo& LoopCombo::operator-=(const LoopCombo& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

LoopCombo& LoopCombo::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

void BiLoopCombo::add(const CyclicWord& l, const CyclicWord& r, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(Key{l, r}, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational BiLoopCombo::coefficient(const CyclicWord& l, const CyclicWord& r) const {
  auto it = terms_.find(Key{l, r});
  return it == terms_.end() ? Rational(0) : it->second;
}

BiLoopCombo BiLoopCombo::swapped() const {
  BiLoopCombo out;
  for (const auto& [k, c] : terms_) out.add(k.second, k.first, c);
  return out;
}

BiLoopCombo BiLoopCombo::wedge() const {
  BiLoopCombo out = *this;
  out -= swapped();
  return out;
}

BiLoopCombo& BiLoopCombo::operator+=(const BiLoopCombo& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

BiLoopCombo& BiLoopCombo::operator-=(const BiLoopCombo& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

BiLoopCombo& BiLoopCombo::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LoopCombo goldman_bracket(const Surface& s, const CyclicWord& u, const CyclicWord& v) {
  LoopCombo out;
  if (u.empty() || v.empty()) return out;
  for (const DoublePoint& p : intersections(s, u, v)) out.add(p.merged, p.sign);
  return out;
}

LoopCombo goldman_bracket(const Surface& s, const LoopCombo& a, const LoopCombo& b,
                          unsigned threads) {
  std::vector<std::pair<const LoopCombo::Map::value_type*, const LoopCombo::Map::value_type*>> jobs;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      if (!ta.first.empty() && !tb.first.empty()) jobs.push_back({&ta, &tb});
  auto run = [&](std::size_t lo, std::size_t hi) {
    LoopCombo part;
    for (std::size_t k = lo; k < hi; ++k) {
      const Rational c = jobs[k].first->second * jobs[k].second->second;
      for (const DoublePoint& p : intersections(s, jobs[k].first->first, jobs[k].second->first))
        part.add(p.merged, c * p.sign);
    }
    return part;
  };
  if (threads <= 1 || jobs.size() < 2 * threads) return run(0, jobs.size());
  std::vector<LoopCombo> parts(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (jobs.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(jobs.size(), t * chunk);
    const std::size_t hi = std::min(jobs.size(), lo + chunk);
    pool.emplace_back([&, t, lo, hi] { parts[t] = run(lo, hi); });
  }
  for (auto& th : pool) th.join();
  LoopCombo out;
  for (const LoopCombo& p : parts) out += p;
  return out;
}

namespace {

void add_double_points(BiLoopCombo& out, const std::vector<DoublePoint>& pts, const Rational& c) {
  for (const DoublePoint& p : pts) {
    out.add(p.split_first, p.split_second, c * p.sign);
    out.add(p.split_second, p.split_first, -c * p.sign);
  }
}

void add_correction(BiLoopCombo& out, const CyclicWord& w, long long rot, const Rational& c) {
  const Rational k = c * kRotationCorrectionSign * rational_of(rot);
  out.add(w, CyclicWord{}, k);
  out.add(CyclicWord{}, w, -k);
}

}  // namespace

BiLoopCombo turaev_cobracket(const Framing& xi, const CyclicWord& w) {
  BiLoopCombo out;
  if (w.empty()) return out;
  add_double_points(out, self_intersections(xi.surface(), w), 1);
  add_correction(out, w, rotation_number(xi, w), 1);
  return out;
}

BiLoopCombo turaev_cobracket(const Framing& xi, const KinkedLoop& w) {
  BiLoopCombo out;
  if (w.word.empty()) return out;
  add_double_points(out, self_intersections(xi.surface(), w), 1);
  add_correction(out, w.word, rotation_number(xi, w), 1);
  return out;
}

BiLoopCombo turaev_cobracket(const Framing& xi, const LoopCombo& a) {
  BiLoopCombo out;
  for (const auto& [w, c] : a.terms()) {
    if (w.empty()) continue;
    BiLoopCombo t = turaev_cobracket(xi, w);
    t *= c;
    out += t;
  }
  return out;
}

BiLoopCombo unframed_cobracket(const Surface& s, const LoopCombo& a) {
  BiLoopCombo out;
  for (const auto& [w, c] : a.terms()) {
    if (w.empty()) continue;
    for (const DoublePoint& p : self_intersections(s, w)) {
      if (p.split_first.empty() || p.split_second.empty()) continue;
      out.add(p.split_first, p.split_second, c * p.sign);
      out.add(p.split_second, p.split_first, -c * p.sign);
    }
  }
  return out;
}

BiLoopCombo bracket_action(const Surface& s, const LoopCombo& x, const BiLoopCombo& t) {
  BiLoopCombo out;
  for (const auto& [k, c] : t.terms()) {
    const LoopCombo left = goldman_bracket(s, x, LoopCombo::single(k.first));
    for (const auto& [w, d] : left.terms()) out.add(w, k.second, c * d);
    const LoopCombo right = goldman_bracket(s, x, LoopCombo::single(k.second));
    for (const auto& [w, d] : right.terms()) out.add(k.first, w, c * d);
  }
  return out;
}

LoopCombo bracket_contract(const Surface& s, const BiLoopCombo& t) {
  LoopCombo out;
  for (const auto& [k, c] : t.terms()) {
    LoopCombo b = goldman_bracket(s, k.first, k.second);
    b *= c;
    out += b;
  }
  return out;
}

}  // namespace gt
