#include "gt/framings.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>

#include "gt/error.hpp"
#include "gt/rational.hpp"

namespace gt {

long long gcd_of(std::span<const long long> v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

std::vector<long long> local_degrees(const Framing& xi) {
  const Surface& s = xi.surface();
  std::vector<long long> d;
  long long sum = 0;
  for (const CyclicWord& g : s.boundary_words()) {
    d.push_back(1 - rotation_number(xi, g));
    sum += d.back();
  }
  if (sum != 2 - 2 * s.genus()) throw InternalError("local degrees violate Poincaré–Hopf");
  return d;
}

int arf_invariant(const Framing& xi) {
  const Surface& s = xi.surface();
  if (s.genus() == 0) throw Error(ErrorCode::NotDefined, "Arf invariant needs genus >= 1");
  for (long long dj : local_degrees(xi))
    if (dj % 2 != 0) throw Error(ErrorCode::NotDefined, "Arf invariant needs every local degree even");
  auto F = [&](int gen) {
    const long long r = rotation_number(xi, CyclicWord::from_letters(Word{Letter{gen, false}}));
    return static_cast<int>(((1 + r) % 2 + 2) % 2);
  };
  int arf = 0;
  for (int i = 1; i <= s.genus(); ++i) arf ^= F(s.x(i)) & F(s.y(i));
  return arf;
}

namespace {

std::vector<CyclicWord> build_family(const Surface& s) {
  std::set<CyclicWord> fam;
  const Letter x{s.x(1), false}, y{s.y(1), false};
  auto simple_nonsep = [&](const CyclicWord& w) {
    if (w.empty()) return false;
    const auto h = homology_class(s, w);
    if (std::gcd(std::abs(h[s.x(1)]), std::abs(h[s.y(1)])) != 1) return false;
    return self_intersections(s, w).empty();
  };
  std::vector<CyclicWord> base;
  base.push_back(CyclicWord::from_letters(Word{x}));
  base.push_back(CyclicWord::from_letters(Word{y}));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      if (a == 0 || b == 0 || std::gcd(std::abs(a), std::abs(b)) != 1) continue;
      base.push_back(CyclicWord::from_letters(concat(power(Word{x}, a), power(Word{y}, b))));
    }
  for (const CyclicWord& w : base) {
    if (!simple_nonsep(w)) continue;
    fam.insert(w);
    for (int j = 1; j <= s.n(); ++j)
      for (int e = 0; e < 2; ++e) {
        CyclicWord t = CyclicWord::from_letters(concat(w.letters(), Word{Letter{s.z(j), e == 1}}));
        if (simple_nonsep(t)) fam.insert(t);
      }
  }
  // every short simple nonseparating class as well
  const int max_len = s.rank() <= 3 ? 6 : 5;
  std::vector<Letter> alphabet;
  for (int g = 0; g < s.rank(); ++g) {
    alphabet.push_back({g, false});
    alphabet.push_back({g, true});
  }
  Word w;
  auto rec = [&](auto&& self) -> void {
    if (!w.empty() && w.front() != w.back().inv()) {
      CyclicWord c = CyclicWord::from_letters(w);
      if (c.size() == w.size() && simple_nonsep(c)) fam.insert(c);
    }
    if (static_cast<int>(w.size()) == max_len) return;
    for (const Letter& l : alphabet) {
      if (!w.empty() && w.back() == l.inv()) continue;
      w.push_back(l);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  return {fam.begin(), fam.end()};
}

}  // namespace

const std::vector<CyclicWord>& a_invariant_family(const Surface& s) {
  if (s.genus() != 1) throw Error(ErrorCode::NotDefined, "A invariant needs genus 1");
  static std::mutex mu;
  static std::map<int, std::vector<CyclicWord>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(s.n());
  if (it == cache.end()) it = cache.emplace(s.n(), build_family(s)).first;
  return it->second;
}

long long a_invariant(const Framing& xi) {
  const Surface& s = xi.surface();
  if (s.genus() != 1) throw Error(ErrorCode::NotDefined, "A invariant needs genus 1");
  long long g = 0;
  for (const CyclicWord& w : a_invariant_family(s)) g = std::gcd(g, std::abs(rotation_number(xi, w)));
  return g;
}

OrbitInvariants orbit_invariants(const Framing& xi) {
  OrbitInvariants inv;
  inv.d = local_degrees(xi);
  const int g = xi.surface().genus();
  bool even = true;
  for (long long dj : inv.d) even = even && dj % 2 == 0;
  if (g >= 1 && even) inv.arf = arf_invariant(xi);
  if (g == 1) inv.a_inv = a_invariant(xi);
  return inv;
}

bool same_mcg_orbit(const Framing& xi0, const Framing& xi1) {
  require_same_surface(xi0.surface(), xi1.surface());
  const OrbitInvariants a = orbit_invariants(xi0), b = orbit_invariants(xi1);
  if (a.d != b.d) return false;
  const int g = xi0.surface().genus();
  if (g == 0) return true;
  if (g == 1) return a.a_inv == b.a_inv;
  return a.arf == b.arf;  // both empty when d is not even
}

bool quasi_algebraic_framing_exists(const Framing& xi) {
  if (xi.surface().genus() != 1) return true;
  const auto d = local_degrees(xi);
  return a_invariant(xi) == gcd_of(d);
}

namespace {

// Solve M t = b exactly over the integers (M square, unimodular).
std::vector<long long> solve_unimodular(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
  const std::size_t r = m.size();
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (piv < r && m[piv][col] == 0) ++piv;
    if (piv == r) throw Error(ErrorCode::NotMappingClass, "automorphism is not invertible on homology");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = 0; row < r; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < r; ++k) m[row][k] -= f * m[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<long long> t(r);
  for (std::size_t k = 0; k < r; ++k) {
    const Rational v = b[k] / m[k][k];
    if (v.get_den() != 1 || !v.get_num().fits_slong_p())
      throw InternalError("pushed-forward twists are not integral");
    t[k] = v.get_num().get_si();
  }
  return t;
}

}  // namespace

Framing pushforward_framing(const FreeGroupAuto& psi, const Framing& xi) {
  const Surface& s = xi.surface();
  require_same_surface(psi.surface(), s);
  require_mapping_class(psi);
  const int r = s.rank();
  const Framing blackboard(s);
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r));
  std::vector<Rational> b(r);
  for (int k = 0; k < r; ++k) {
    const CyclicWord gen = CyclicWord::from_letters(Word{Letter{k, false}});
    const CyclicWord img = psi.apply(gen);
    const auto h = homology_class(s, img);
    for (int c = 0; c < r; ++c) m[k][c] = h[c];
    b[k] = rational_of(rotation_number(xi, gen) - rotation_number(blackboard, img));
  }
  Framing out(s, solve_unimodular(std::move(m), std::move(b)));
  if (local_degrees(out) != local_degrees(xi)) throw InternalError("pushforward changed local degrees");
  return out;
}

std::vector<long long> framing_cocycle(const FreeGroupAuto& psi, const Framing& xi) {
  const Surface& s = xi.surface();
  const Framing pushed = pushforward_framing(psi, xi);
  auto diff = [&](int gen) {
    const CyclicWord w = CyclicWord::from_letters(Word{Letter{gen, false}});
    return rotation_number(pushed, w) - rotation_number(xi, w);
  };
  for (int j = 1; j <= s.n(); ++j)
    if (diff(s.z(j)) != 0) throw InternalError("cocycle does not vanish on a puncture class");
  std::vector<long long> f;
  for (int i = 1; i <= s.genus(); ++i) {
    f.push_back(diff(s.x(i)));
    f.push_back(diff(s.y(i)));
  }
  return f;
}

long long intersection_pairing(const Surface& s, std::span<const int> a, std::span<const int> b) {
  long long v = 0;
  for (int i = 1; i <= s.genus(); ++i)
    v += static_cast<long long>(a[s.x(i)]) * b[s.y(i)] - static_cast<long long>(a[s.y(i)]) * b[s.x(i)];
  return v;
}

}  // namespace gt

namespace gt {

std::vector<Framing> orbit_in_box(const Framing& xi, long long box) {
  const Surface& s = xi.surface();
  std::vector<FreeGroupAuto> moves = elementary_moves(s);
  const std::size_t k = moves.size();
  for (std::size_t i = 0; i < k; ++i) moves.push_back(moves[i].inverse());
  auto inside = [&](const std::vector<long long>& t) {
    return std::all_of(t.begin(), t.end(), [&](long long v) { return std::abs(v) <= box; });
  };
  std::set<std::vector<long long>> seen;
  std::queue<Framing> todo;
  if (inside(xi.twists())) {
    seen.insert(xi.twists());
    todo.push(xi);
  }
  while (!todo.empty()) {
    const Framing cur = todo.front();
    todo.pop();
    for (const FreeGroupAuto& m : moves) {
      Framing nx = pushforward_framing(m, cur);
      if (!inside(nx.twists()) || !seen.insert(nx.twists()).second) continue;
      todo.push(std::move(nx));
    }
  }
  std::vector<Framing> out;
  for (const auto& t : seen) out.emplace_back(s, t);
  return out;
}

}  // namespace gt
