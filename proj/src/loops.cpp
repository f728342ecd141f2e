#include "gt/loops.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "gt/error.hpp"

namespace gt {

Framing::Framing(Surface s, std::vector<long long> twists)
    : surface_(std::move(s)), twists_(std::move(twists)) {
  if (twists_.empty()) twists_.assign(surface_.rank(), 0);
  if (static_cast<int>(twists_.size()) != surface_.rank())
    throw Error(ErrorCode::SurfaceMismatch, "twist vector has wrong length");
}

Framing Framing::with_twist(int gen, long long t) const {
  Framing f = *this;
  f.twists_.at(gen) = t;
  return f;
}

std::vector<int> homology_class(const Surface& s, const CyclicWord& w) {
  return homology_vector(s.rank(), w.letters());
}

namespace {

// Headings are measured in units of 1/(2N) turn.  A strand leaves the vertex
// radially through slot h (heading 2h) and comes back radially through slot h
// (heading 2h + N).
long long exterior_angle(long long from, long long to, long long N) {
  long long v = ((to - from) % (2 * N) + 2 * N) % (2 * N);
  if (v > N) v -= 2 * N;
  return v;  // in (-N, N]; an exact U-turn counts as +1/2 turn
}

long long turning(const Surface& s, std::span<const Letter> w, std::span<const Kink> kinks) {
  const long long N = s.slot_count();
  std::vector<long long> headings;
  headings.reserve(2 * w.size() + 4 * kinks.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    headings.push_back(2LL * s.out_slot(w[k]));
    const long long in = 2LL * s.in_slot(w[k]) + N;
    headings.push_back(in);
    for (const Kink& kk : kinks) {
      if (kk.corner != k) continue;
      for (int q = 1; q <= 4; ++q) headings.push_back(in + kk.sign * q * (N / 2));
    }
  }
  long long total = 0;
  for (std::size_t i = 0; i < headings.size(); ++i)
    total += exterior_angle(headings[i], headings[(i + 1) % headings.size()], N);
  if (total % (2 * N) != 0)
    throw InternalError("turning number is not an integer");
  return total / (2 * N);
}

long long twist_sum(const Framing& xi, std::span<const Letter> w) {
  long long t = 0;
  for (const Letter& l : w) t += l.sign() * xi.twist(l.gen);
  return t;
}

}  // namespace

long long rotation_number_raw(const Framing& xi, std::span<const Letter> w) {
  if (w.empty()) throw Error(ErrorCode::ConstantClass, "rotation number of the constant class");
  return turning(xi.surface(), w, {}) + twist_sum(xi, w);
}

long long rotation_number(const Framing& xi, const CyclicWord& w) {
  return rotation_number_raw(xi, w.letters());
}

long long rotation_number(const Framing& xi, const KinkedLoop& w) {
  if (w.word.empty()) throw Error(ErrorCode::ConstantClass, "rotation number of the constant class");
  for (const Kink& k : w.kinks)
    if (k.corner >= w.word.size() || (k.sign != 1 && k.sign != -1))
      throw InternalError("bad kink");
  return turning(xi.surface(), w.word.letters(), w.kinks) + twist_sum(xi, w.word.letters());
}

namespace {

struct Corner {
  int arr = 0;  // slot the strand comes back through
  int dep = 0;  // slot it leaves through next
};

std::vector<Corner> corners_of(const Surface& s, std::span<const Letter> w) {
  const std::size_t m = w.size();
  std::vector<Corner> c(m);
  for (std::size_t k = 0; k < m; ++k) c[k] = {s.in_slot(w[k]), s.out_slot(w[(k + 1) % m])};
  return c;
}

// A branch of a curve seen at one corner, possibly traversed backwards.
struct Branch {
  const std::vector<Corner>* c = nullptr;
  bool reversed = false;
  long m() const { return static_cast<long>(c->size()); }
  Corner at(long k) const {
    const Corner& x = (*c)[((k % m()) + m()) % m()];
    return reversed ? Corner{x.dep, x.arr} : x;
  }
  long back(long k, long t) const { return reversed ? k + t : k - t; }
};

struct Linked {
  int sign = 0;     // intersection number of (branch 1, branch 2 as given)
  long shift = 0;   // length of the shared segment behind the divergence
};

// Strands 1 and 2 share their arrival slot at (i, j) and then separate.
// Walk back to where they joined; they cross iff their sides differ at the
// two ends.  Returns sign 0 if unlinked or parallel forever.
Linked linked_pair(int N, const Branch& b1, long i, const Branch& b2, long j) {
  auto gap = [N](const Corner& c) { return ((c.dep - c.arr) % N + N) % N; };
  const Corner d1 = b1.at(i), d2 = b2.at(j);
  const bool left_at_split = gap(d1) > gap(d2);
  const long limit = b1.m() * b2.m() + 2;
  for (long t = 1; t <= limit; ++t) {
    const Corner c1 = b1.at(b1.back(i, t)), c2 = b2.at(b2.back(j, t));
    if (c1.arr == c2.arr && c1.dep == c2.dep) continue;
    if (c1.dep != c2.dep || c1.arr == c2.arr) throw InternalError("shared segment walk lost track");
    const bool left_at_join = gap(c1) > gap(c2);
    if (left_at_join == left_at_split) return {0, t};
    int eps = left_at_join ? 1 : -1;
    if (b2.reversed) eps = -eps;
    return {eps, t};
  }
  return {0, 0};
}

bool ccw_inside(int x, int a, int b, int N) {
  return ((x - a) % N + N) % N < ((b - a) % N + N) % N;
}

// Both-free corners: chords (a1,b1) and (a2,b2) with four distinct slots.
int chord_sign(const Corner& c1, const Corner& c2, int N) {
  const bool a2in = ccw_inside(c2.arr, c1.arr, c1.dep, N);
  const bool b2in = ccw_inside(c2.dep, c1.arr, c1.dep, N);
  if (a2in == b2in) return 0;
  return a2in ? 1 : -1;
}

bool distinct_slots(const Corner& a, const Corner& b) {
  return a.arr != b.arr && a.arr != b.dep && a.dep != b.arr && a.dep != b.dep;
}

Word rotated(std::span<const Letter> w, std::size_t start, std::size_t len) {
  Word out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(w[(start + k) % w.size()]);
  return out;
}

struct RawCrossing {
  long i = 0, j = 0;
  int sign = 0;
};

// All crossings between the branches of two curves; when `self`, each
// crossing of the curve with itself is listed once.
std::vector<RawCrossing> raw_crossings(const Surface& s, const std::vector<Corner>& c1,
                                       const std::vector<Corner>& c2, bool self) {
  const int N = s.slot_count();
  const long m1 = static_cast<long>(c1.size()), m2 = static_cast<long>(c2.size());
  Branch f1{&c1, false}, f2{&c2, false}, r2{&c2, true};
  std::vector<RawCrossing> out;
  for (long i = 0; i < m1; ++i) {
    for (long j = 0; j < m2; ++j) {
      if (self && i == j) continue;
      const Corner a = c1[i], b = c2[j];
      if (a.arr == b.arr && a.dep != b.dep) {
        if (self && j < i) continue;
        Linked L = linked_pair(N, f1, i, f2, j);
        if (L.sign != 0) out.push_back({i, j, L.sign});
      } else if (a.arr == b.dep && a.dep != b.arr) {
        Linked L = linked_pair(N, f1, i, r2, j);
        if (L.sign == 0) continue;
        if (self) {
          // the same crossing is also seen from the other strand
          const long i2 = ((j + L.shift) % m1 + m1) % m1;
          if (i2 < i) continue;
        }
        out.push_back({i, j, L.sign});
      } else if (distinct_slots(a, b)) {
        if (self && j < i) continue;
        const int e = chord_sign(a, b, N);
        if (e != 0) out.push_back({i, j, e});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<DoublePoint> self_intersections_raw(const Surface& s, std::span<const Letter> w) {
  std::vector<DoublePoint> out;
  const std::size_t m = w.size();
  if (m == 0) return out;
  const auto c = corners_of(s, w);
  auto emit = [&](std::size_t i, std::size_t j, int sign) {
    if (j < i) {
      std::swap(i, j);
      sign = -sign;
    }
    DoublePoint p;
    p.first = i;
    p.second = j;
    p.sign = sign;
    p.split_first = CyclicWord::from_letters(rotated(w, i + 1, j - i));
    p.split_second = CyclicWord::from_letters(rotated(w, j + 1, m - (j - i)));
    out.push_back(std::move(p));
  };
  for (const RawCrossing& x : raw_crossings(s, c, c, true)) emit(x.i, x.j, x.sign);
  // A proper power u^k spirals: its last strand crosses the other k-1 copies.
  const std::size_t p = primitive_period(w);
  const std::size_t k = m / p;
  for (std::size_t q = 0; q + 1 < k; ++q) emit(q * p + p - 1, m - 1, 1);
  std::sort(out.begin(), out.end(), [](const DoublePoint& a, const DoublePoint& b) {
    return std::tie(a.first, a.second, a.sign) < std::tie(b.first, b.second, b.sign);
  });
  return out;
}

std::vector<DoublePoint> intersections_raw(const Surface& s, std::span<const Letter> u,
                                           std::span<const Letter> v) {
  std::vector<DoublePoint> out;
  if (u.empty() || v.empty()) return out;
  const auto cu = corners_of(s, u), cv = corners_of(s, v);
  for (const RawCrossing& x : raw_crossings(s, cu, cv, false)) {
    DoublePoint p;
    p.first = static_cast<std::size_t>(x.i);
    p.second = static_cast<std::size_t>(x.j);
    p.sign = x.sign;
    Word merged = rotated(u, p.first + 1, u.size());
    Word tail = rotated(v, p.second + 1, v.size());
    merged.insert(merged.end(), tail.begin(), tail.end());
    p.merged = CyclicWord::from_letters(merged);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<DoublePoint> self_intersections(const Surface& s, const CyclicWord& w) {
  return self_intersections_raw(s, w.letters());
}

std::vector<DoublePoint> intersections(const Surface& s, const CyclicWord& u, const CyclicWord& v) {
  return intersections_raw(s, u.letters(), v.letters());
}

namespace {

struct P2 {
  long long x, y;
};

long long cross(P2 a, P2 b) { return a.x * b.y - a.y * b.x; }
P2 sub(P2 a, P2 b) { return {a.x - b.x, a.y - b.y}; }

bool segments_cross(P2 a, P2 b, P2 c, P2 d) {
  auto o = [](P2 p, P2 q, P2 r) {
    long long v = cross(sub(q, p), sub(r, p));
    return (v > 0) - (v < 0);
  };
  return o(a, b, c) * o(a, b, d) < 0 && o(c, d, a) * o(c, d, b) < 0;
}

// Crossing sign of the explicit kink loop: the strand runs east, loops once
// and continues east.  Mirrored in the x-axis for a negative kink.
int kink_crossing_sign(int sign) {
  std::array<P2, 6> pts{{{0, 0}, {2, 2}, {1, 3}, {0, 2}, {2, 0}, {4, 0}}};
  if (sign < 0)
    for (P2& p : pts) p.y = -p.y;
  int found = 0;
  int eps = 0;
  for (std::size_t a = 0; a + 1 < pts.size(); ++a)
    for (std::size_t b = a + 2; b + 1 < pts.size(); ++b)
      if (segments_cross(pts[a], pts[a + 1], pts[b], pts[b + 1])) {
        ++found;
        const long long c = cross(sub(pts[a + 1], pts[a]), sub(pts[b + 1], pts[b]));
        eps = c > 0 ? 1 : -1;
      }
  if (found != 1) throw InternalError("kink template must cross itself once");
  return eps;
}

}  // namespace

std::vector<DoublePoint> self_intersections(const Surface& s, const KinkedLoop& w) {
  std::vector<DoublePoint> out = self_intersections(s, w.word);
  for (const Kink& k : w.kinks) {
    DoublePoint p;
    p.first = p.second = k.corner;
    p.sign = kink_crossing_sign(k.sign);
    p.split_first = CyclicWord{};
    p.split_second = w.word;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace gt
