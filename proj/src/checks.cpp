#include "gt/checks.hpp"

#include <numeric>
#include <tuple>

#include "gt/error.hpp"
#include "gt/framings.hpp"

namespace gt {

CyclicWord random_class(const Surface& s, std::mt19937_64& rng, int min_len, int max_len) {
  std::uniform_int_distribution<int> len_d(min_len, max_len);
  std::uniform_int_distribution<int> gen_d(0, s.rank() - 1);
  std::bernoulli_distribution inv_d(0.5);
  while (true) {
    Word w;
    const int len = len_d(rng);
    for (int i = 0; i < len; ++i) w.push_back({gen_d(rng), inv_d(rng)});
    CyclicWord c = CyclicWord::from_letters(w);
    if (static_cast<int>(c.size()) >= std::max(min_len, 1)) return c;
  }
}

Framing random_framing(const Surface& s, std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  std::vector<long long> t(s.rank());
  for (auto& v : t) v = d(rng);
  return Framing(s, std::move(t));
}

FreeGroupAuto random_mapping_class(const Surface& s, std::mt19937_64& rng, int steps) {
  const std::vector<FreeGroupAuto> moves = elementary_moves(s);
  FreeGroupAuto a = FreeGroupAuto::identity(s);
  if (moves.empty()) return a;
  const int k = std::uniform_int_distribution<int>(1, steps)(rng);
  for (int i = 0; i < k; ++i) {
    const FreeGroupAuto& m = moves[rng() % moves.size()];
    a = (rng() % 2) ? a * m.inverse() : a * m;
  }
  return a;
}

bool antisymmetry_holds(const Surface& s, const LoopCombo& a, const LoopCombo& b) {
  return (goldman_bracket(s, a, b) + goldman_bracket(s, b, a)).is_zero();
}

bool jacobi_holds(const Surface& s, const LoopCombo& a, const LoopCombo& b, const LoopCombo& c) {
  const LoopCombo j = goldman_bracket(s, a, goldman_bracket(s, b, c)) +
                      goldman_bracket(s, b, goldman_bracket(s, c, a)) +
                      goldman_bracket(s, c, goldman_bracket(s, a, b));
  return j.is_zero();
}

bool cojacobi_holds(const Framing& xi, const LoopCombo& a) {
  using Key = std::tuple<CyclicWord, CyclicWord, CyclicWord>;
  std::map<Key, Rational> t;
  auto add = [&](const CyclicWord& u, const CyclicWord& v, const CyclicWord& w, const Rational& q) {
    auto [it, fresh] = t.try_emplace({u, v, w}, q);
    if (fresh) return;
    it->second += q;
    if (it->second == 0) t.erase(it);
  };
  // (1 + τ + τ²)(δ ⊗ 1)δ
  const BiLoopCombo d = turaev_cobracket(xi, a);
  for (const auto& [k, q] : d.terms()) {
    const BiLoopCombo dd = turaev_cobracket(xi, k.first);
    for (const auto& [k2, q2] : dd.terms()) {
      const Rational c = q * q2;
      add(k2.first, k2.second, k.second, c);
      add(k2.second, k.second, k2.first, c);
      add(k.second, k2.first, k2.second, c);
    }
  }
  return t.empty();
}

bool compatibility_holds(const Framing& xi, const LoopCombo& a, const LoopCombo& b) {
  const Surface& s = xi.surface();
  const BiLoopCombo lhs = turaev_cobracket(xi, goldman_bracket(s, a, b));
  const BiLoopCombo rhs = bracket_action(s, a, turaev_cobracket(xi, b)) -
                          bracket_action(s, b, turaev_cobracket(xi, a));
  return lhs == rhs;
}

bool involutivity_holds(const Framing& xi, const LoopCombo& a) {
  return bracket_contract(xi.surface(), turaev_cobracket(xi, a)).is_zero();
}

bool kink_independence_holds(const Framing& xi, const KinkedLoop& w) {
  return turaev_cobracket(xi, w) == turaev_cobracket(xi, w.word);
}

bool poincare_hopf_holds(const Framing& xi) {
  const auto d = local_degrees(xi);
  return std::accumulate(d.begin(), d.end(), 0LL) == 2 - 2 * xi.surface().genus();
}

bool cocycle_holds(const Framing& xi, const FreeGroupAuto& p1, const FreeGroupAuto& p2) {
  const Surface& s = xi.surface();
  const auto lhs = framing_cocycle(p1 * p2, xi);
  const auto f2 = framing_cocycle(p2, xi);
  const auto back = p1.inverse().abelianization();
  // (ψ'_* f)(c) = f(ψ'^{-1}_* c); f only sees the handle part
  std::vector<long long> rhs = framing_cocycle(p1, xi);
  for (int i = 1; i <= s.genus(); ++i)
    for (int side = 0; side < 2; ++side) {
      const int c = side ? s.y(i) : s.x(i);
      long long v = 0;
      for (int k = 1; k <= s.genus(); ++k)
        v += back[s.x(k)][c] * f2[2 * (k - 1)] + back[s.y(k)][c] * f2[2 * (k - 1) + 1];
      rhs[2 * (i - 1) + side] += v;
    }
  return lhs == rhs;
}

bool point_push_cocycle_holds(const Framing& xi, int j, std::span<const Letter> alpha) {
  const Surface& s = xi.surface();
  const auto d = local_degrees(xi);
  const auto f = framing_cocycle(point_push_automorphism(s, j, alpha), xi);
  const auto ha = homology_vector(s.rank(), alpha);
  std::vector<long long> expect;
  for (int i = 1; i <= s.genus(); ++i)
    for (int side = 0; side < 2; ++side) {
      const auto hc = homology_vector(s.rank(), Word{Letter{side ? s.y(i) : s.x(i), false}});
      expect.push_back(d[j] * intersection_pairing(s, ha, hc));
    }
  return f == expect;
}

SuiteReport run_invariant_suite(const Surface& s, int samples, std::uint64_t seed, int max_len) {
  std::mt19937_64 rng(seed);
  SuiteReport rep;
  const Framing blackboard(s);
  for (int it = 0; it < samples; ++it) {
    const Framing xi = random_framing(s, rng, 3);
    const CyclicWord u = random_class(s, rng, 1, max_len);
    const CyclicWord v = random_class(s, rng, 1, max_len);
    const CyclicWord w = random_class(s, rng, 1, max_len);
    const LoopCombo a = LoopCombo::single(u), b = LoopCombo::single(v), c = LoopCombo::single(w);
    rep["antisymmetry"].record(antisymmetry_holds(s, a, b));
    rep["jacobi"].record(jacobi_holds(s, a, b, c));
    rep["cojacobi"].record(cojacobi_holds(xi, a));
    rep["compatibility"].record(compatibility_holds(xi, a, b));
    rep["involutivity"].record(involutivity_holds(xi, a));
    KinkedLoop kl{u, {}};
    const int kinks = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < kinks; ++k)
      kl.kinks.push_back({rng() % u.size(), (rng() % 2) ? 1 : -1});
    rep["kink_independence"].record(kink_independence_holds(xi, kl));
    rep["poincare_hopf"].record(poincare_hopf_holds(xi));
    bool integral = true;
    try {
      (void)rotation_number(xi, u);
    } catch (const InternalError&) {
      integral = false;
    }
    rep["whitney_integrality"].record(integral);
    rep["cocycle"].record(
        cocycle_holds(xi, random_mapping_class(s, rng, 3), random_mapping_class(s, rng, 3)));
    if (s.n() > 0) {
      const int j = std::uniform_int_distribution<int>(1, s.n())(rng);
      Word alpha;
      const CyclicWord r = random_class(s, rng, 1, 3);
      for (Letter l : r.letters())
        if (l.gen != s.z(j)) alpha.push_back(l);
      alpha = free_reduce(alpha);
      if (!alpha.empty()) rep["point_push"].record(point_push_cocycle_holds(xi, j, alpha));
    }
  }
  return rep;
}

}  // namespace gt
