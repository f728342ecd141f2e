#include "geometric_oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace oracle {

using gt::Letter;
using gt::Word;

namespace {

struct Pt {
  long long x, y;
};

long long orient(Pt a, Pt b, Pt c) {
  long long v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

Letter at(const Word& w, long k) {
  const long m = static_cast<long>(w.size());
  return w[((k % m) + m) % m];
}

struct Layout {
  std::vector<int> band_size;
  // rank of strand (curve, pos) in its band
  std::vector<std::vector<int>> rank;
  int spacing = 1;
};

Layout layout(const gt::Surface& s, const std::vector<Word>& curves, const Arrangement& arr) {
  Layout L;
  L.band_size.assign(s.rank(), 0);
  L.rank.resize(curves.size());
  for (std::size_t c = 0; c < curves.size(); ++c) L.rank[c].assign(curves[c].size(), -1);
  for (int g = 0; g < s.rank(); ++g) {
    L.band_size[g] = static_cast<int>(arr[g].size());
    for (std::size_t r = 0; r < arr[g].size(); ++r)
      L.rank[arr[g][r].first][arr[g][r].second] = static_cast<int>(r);
    L.spacing = std::max(L.spacing, L.band_size[g] + 1);
  }
  return L;
}

// Boundary point of strand (c,k) at one end of its band, on the parabola.
Pt endpoint(const gt::Surface& s, const Layout& L, const std::vector<Word>& curves, int c,
            long k, bool arriving) {
  const long m = static_cast<long>(curves[c].size());
  const long kk = ((k % m) + m) % m;
  const Letter l = curves[c][kk];
  const int r = L.rank[c][kk];
  const int M = L.band_size[l.gen];
  // Forward strands arrive at the end slot and leave from the start slot.
  const bool at_end = arriving != l.inverse;
  const int slot = at_end ? s.end_slot(l.gen) : s.start_slot(l.gen);
  const int offset = at_end ? M - 1 - r : r;
  const long long t = static_cast<long long>(slot) * L.spacing + offset;
  return {t, t * t};
}

}  // namespace

namespace {

Word reversed_curve(const Word& w) { return gt::inverse_word(w); }

}  // namespace

Arrangement lexicographic_arrangement(const gt::Surface& s, const std::vector<Word>& curves) {
  Arrangement arr(s.rank());
  long horizon = 2;
  for (const Word& w : curves) horizon += 2 * static_cast<long>(w.size());
  for (std::size_t c = 0; c < curves.size(); ++c)
    for (std::size_t k = 0; k < curves[c].size(); ++k)
      arr[curves[c][k].gen].push_back({static_cast<int>(c), static_cast<int>(k)});
  const int N = s.slot_count();
  // reading of the strand in the band's own direction, q steps past the band
  auto reading = [&](std::pair<int, int> st, long q) {
    const Word& w = curves[st.first];
    const Letter l = w[st.second];
    return l.inverse ? at(w, st.second - q).inv() : at(w, st.second + q);
  };
  for (auto& band : arr) {
    std::stable_sort(band.begin(), band.end(), [&](auto a, auto b) {
      for (long q = 1; q <= horizon; ++q) {
        const Letter ra = reading(a, q), rb = reading(b, q);
        if (ra == rb) continue;
        const int A = s.in_slot(reading(a, q - 1));
        const int ga = ((s.out_slot(ra) - A) % N + N) % N;
        const int gb = ((s.out_slot(rb) - A) % N + N) % N;
        return ga < gb;  // the right-hand strand gets the lower rank
      }
      return a < b;
    });
  }
  return arr;
}

std::vector<Crossing> draw_and_cross(const gt::Surface& s, const std::vector<Word>& curves,
                                     const Arrangement& arr, bool mixed_only) {
  const Layout L = layout(s, curves, arr);
  struct Chord {
    int c, k;
    Pt a, b;
  };
  std::vector<Chord> chords;
  for (std::size_t c = 0; c < curves.size(); ++c)
    for (std::size_t k = 0; k < curves[c].size(); ++k) {
      const int ci = static_cast<int>(c), ki = static_cast<int>(k);
      chords.push_back({ci, ki, endpoint(s, L, curves, ci, ki, true),
                        endpoint(s, L, curves, ci, ki + 1, false)});
    }
  std::vector<Crossing> out;
  for (std::size_t p = 0; p < chords.size(); ++p)
    for (std::size_t q = p + 1; q < chords.size(); ++q) {
      const Chord& u = chords[p];
      const Chord& v = chords[q];
      if (mixed_only && u.c == v.c) continue;
      if (orient(u.a, u.b, v.a) * orient(u.a, u.b, v.b) >= 0) continue;
      if (orient(v.a, v.b, u.a) * orient(v.a, v.b, u.b) >= 0) continue;
      const Pt du{u.b.x - u.a.x, u.b.y - u.a.y}, dv{v.b.x - v.a.x, v.b.y - v.a.y};
      const long long cr = du.x * dv.y - du.y * dv.x;
      out.push_back({u.c, u.k, v.c, v.k, cr > 0 ? 1 : -1});
    }
  return out;
}

Key self_key(int sign, gt::CyclicWord a, gt::CyclicWord b) {
  if (b < a) {
    std::swap(a, b);
    sign = -sign;
  }
  if (a == b) sign = 0;  // the sign of a symmetric split depends on labelling only
  return {sign, a, b};
}

Key mixed_key(int sign, gt::CyclicWord merged) { return {sign, merged, gt::CyclicWord{}}; }

std::multiset<Key> keys(const std::vector<Word>& curves, const std::vector<Crossing>& xs) {
  std::multiset<Key> out;
  for (const Crossing& x : xs) {
    if (x.c1 == x.c2) {
      const Word& w = curves[x.c1];
      const long m = static_cast<long>(w.size());
      Word a, b;
      for (long k = x.i + 1; k <= x.j; ++k) a.push_back(at(w, k));
      for (long k = x.j + 1; k <= x.i + m; ++k) b.push_back(at(w, k));
      out.insert(self_key(x.sign, gt::CyclicWord::from_letters(a), gt::CyclicWord::from_letters(b)));
    } else {
      const Word& u = curves[x.c1];
      const Word& v = curves[x.c2];
      Word merged;
      for (long k = 1; k <= static_cast<long>(u.size()); ++k) merged.push_back(at(u, x.i + k));
      for (long k = 1; k <= static_cast<long>(v.size()); ++k) merged.push_back(at(v, x.j + k));
      out.insert(mixed_key(x.sign, gt::CyclicWord::from_letters(merged)));
    }
  }
  return out;
}

namespace {

struct Search {
  const gt::Surface& s;
  const std::vector<Word>& curves;
  bool mixed_only;
  SearchResult res;
  std::size_t cap = 32;

  void consider(const Arrangement& arr) {
    ++res.evaluated;
    auto xs = draw_and_cross(s, curves, arr, mixed_only);
    if (res.evaluated == 1 || xs.size() < res.min_crossings) {
      res.min_crossings = xs.size();
      res.minimal_keys.clear();
    }
    if (xs.size() == res.min_crossings && res.minimal_keys.size() < cap) {
      auto k = keys(curves, xs);
      if (std::find(res.minimal_keys.begin(), res.minimal_keys.end(), k) == res.minimal_keys.end())
        res.minimal_keys.push_back(std::move(k));
    }
  }
};

std::size_t count_of(const Arrangement& arr, const gt::Surface& s, const std::vector<Word>& curves,
                     bool mixed_only) {
  return draw_and_cross(s, curves, arr, mixed_only).size();
}

}  // namespace

SearchResult minimise(const gt::Surface& s, const std::vector<Word>& curves, std::mt19937_64& rng,
                      bool mixed_only, std::size_t exhaustive_limit, int restarts) {
  Search S{s, curves, mixed_only, {}};
  Arrangement base = lexicographic_arrangement(s, curves);
  double total = 1;
  for (const auto& band : base)
    for (std::size_t k = 2; k <= band.size(); ++k) total *= static_cast<double>(k);

  if (total <= static_cast<double>(exhaustive_limit)) {
    S.res.exhaustive = true;
    Arrangement arr = base;
    for (auto& band : arr) std::sort(band.begin(), band.end());
    // odometer over permutations of every band
    while (true) {
      S.consider(arr);
      std::size_t g = 0;
      for (; g < arr.size(); ++g) {
        if (std::next_permutation(arr[g].begin(), arr[g].end())) break;
      }
      if (g == arr.size()) break;
    }
    return S.res;
  }

  // Local search: move one strand to another rank in its band while that
  // strictly lowers the crossing count.
  auto descend = [&](Arrangement arr) {
    std::size_t best = count_of(arr, s, curves, mixed_only);
    bool improved = true;
    while (improved) {
      improved = false;
      for (auto& band : arr)
        for (std::size_t from = 0; from < band.size(); ++from)
          for (std::size_t to = 0; to < band.size(); ++to) {
            if (from == to) continue;
            auto saved = band;
            auto st = band[from];
            band.erase(band.begin() + static_cast<long>(from));
            band.insert(band.begin() + static_cast<long>(to), st);
            const std::size_t c = count_of(arr, s, curves, mixed_only);
            if (c < best) {
              best = c;
              improved = true;
            } else {
              band = std::move(saved);
            }
          }
    }
    S.consider(arr);
  };
  S.consider(base);
  descend(base);
  {
    // the same ordering read backwards along every curve
    std::vector<Word> rev;
    for (const Word& w : curves) rev.push_back(reversed_curve(w));
    Arrangement back = lexicographic_arrangement(s, rev);
    for (auto& band : back) {
      for (auto& st : band) st.second = static_cast<int>(curves[st.first].size()) - 1 - st.second;
      std::reverse(band.begin(), band.end());
    }
    S.consider(back);
    descend(back);
  }
  for (int r = 0; r < restarts; ++r) {
    Arrangement arr = base;
    for (auto& band : arr) std::shuffle(band.begin(), band.end(), rng);
    descend(arr);
  }
  return S.res;
}

}  // namespace oracle

namespace oracle {

namespace {

// One strand endpoint on the disk boundary: which strand and which end.
struct EndRef {
  int band, strand;  // strand index inside its band's list
  int slot;
  bool reversed;     // at the end slot ranks run backwards
};

struct ChordPair {
  int p, q;                       // chord indices
  std::vector<std::pair<int, int>> deps;  // (endpoint of p, endpoint of q) sharing a slot
};

struct BranchAndBound {
  const gt::Surface& s;
  const std::vector<Word>& curves;
  bool mixed_only;
  const std::multiset<Key>* target;
  std::size_t budget;

  std::vector<std::vector<std::pair<int, int>>> strands;  // per band: (curve, pos)
  std::vector<std::array<EndRef, 2>> chord_ends;          // arrival, departure
  std::vector<std::pair<int, int>> chord_id;              // (curve, corner)
  std::vector<ChordPair> pairs;
  // order of insertion: (band, strand)
  std::vector<std::pair<int, int>> plan;
  std::vector<std::vector<int>> decided_at;  // plan step -> pair indices decided then
  std::vector<int> anchor;                   // plan step -> strand it must sit above, or -1
  std::vector<std::vector<int>> order;       // current partial order per band
  std::vector<std::vector<int>> pos_in_band; // strand -> index in order, or -1
  std::size_t best = 0;
  std::size_t nodes = 0;
  bool aborted = false;
  bool found_target = false;
  bool strict = true;  // prune at >= best (searching for an improvement)

  int find_strand(int band, int c, int k) const {
    for (std::size_t i = 0; i < strands[band].size(); ++i)
      if (strands[band][i] == std::make_pair(c, k)) return static_cast<int>(i);
    return -1;
  }

  void setup() {
    strands.assign(s.rank(), {});
    for (std::size_t c = 0; c < curves.size(); ++c)
      for (std::size_t k = 0; k < curves[c].size(); ++k)
        strands[curves[c][k].gen].push_back({static_cast<int>(c), static_cast<int>(k)});
    for (std::size_t c = 0; c < curves.size(); ++c) {
      const long m = static_cast<long>(curves[c].size());
      for (long k = 0; k < m; ++k) {
        const Letter l = curves[c][k], nl = curves[c][(k + 1) % m];
        EndRef a{l.gen, find_strand(l.gen, static_cast<int>(c), static_cast<int>(k)),
                 s.in_slot(l), !l.inverse};
        EndRef d{nl.gen, find_strand(nl.gen, static_cast<int>(c), static_cast<int>((k + 1) % m)),
                 s.out_slot(nl), nl.inverse};
        chord_ends.push_back({a, d});
        chord_id.push_back({static_cast<int>(c), static_cast<int>(k)});
      }
    }
    // insertion plan: walk all curves in step so chords get decided early
    std::size_t longest = 0;
    for (const Word& w : curves) longest = std::max(longest, w.size());
    for (std::size_t k = 0; k < longest; ++k)
      for (std::size_t c = 0; c < curves.size(); ++c) {
        if (k >= curves[c].size()) continue;
        const int b = curves[c][k].gen;
        plan.push_back({b, find_strand(b, static_cast<int>(c), static_cast<int>(k))});
      }
    // A proper power r^k looks the same after shifting by one period, so
    // every copy of its first strand may be kept above that strand.
    anchor.assign(plan.size(), -1);
    for (std::size_t t = 0; t < plan.size(); ++t) {
      const auto [b, i] = plan[t];
      const auto [c, k] = strands[b][i];
      const Word& w = curves[c];
      const std::size_t p = gt::primitive_period(w);
      if (k != 0 && static_cast<std::size_t>(k) % p == 0) anchor[t] = find_strand(b, c, 0);
    }
    std::vector<std::vector<int>> step_of(s.rank());
    for (int b = 0; b < s.rank(); ++b) step_of[b].assign(strands[b].size(), 0);
    for (std::size_t t = 0; t < plan.size(); ++t) step_of[plan[t].first][plan[t].second] = static_cast<int>(t);
    decided_at.assign(plan.size() + 1, {});
    for (std::size_t p = 0; p < chord_ends.size(); ++p)
      for (std::size_t q = p + 1; q < chord_ends.size(); ++q) {
        if (mixed_only && chord_id[p].first == chord_id[q].first) continue;
        ChordPair cp{static_cast<int>(p), static_cast<int>(q), {}};
        int when = -1;  // decided before any insertion
        for (int e = 0; e < 2; ++e)
          for (int f = 0; f < 2; ++f) {
            const EndRef& x = chord_ends[p][e];
            const EndRef& y = chord_ends[q][f];
            if (x.slot != y.slot) continue;
            cp.deps.push_back({e, f});
            when = std::max({when, step_of[x.band][x.strand], step_of[y.band][y.strand]});
          }
        pairs.push_back(cp);
        decided_at[when + 1].push_back(static_cast<int>(pairs.size() - 1));
      }
    order.assign(s.rank(), {});
    pos_in_band.assign(s.rank(), {});
    for (int b = 0; b < s.rank(); ++b) pos_in_band[b].assign(strands[b].size(), -1);
  }

  // Boundary parameter of an endpoint given the current partial orders.
  long long param(const EndRef& e) const {
    const int r = pos_in_band[e.band][e.strand];
    const int M = static_cast<int>(strands[e.band].size()) + 1;
    const int off = e.reversed ? M - 1 - r : r;
    return static_cast<long long>(e.slot) * 1024 + off;
  }

  int crossing_sign(const ChordPair& cp) const {
    auto pt = [&](const EndRef& e) {
      const long long t = param(e);
      return Pt{t, t * t};
    };
    const Pt a = pt(chord_ends[cp.p][0]), b = pt(chord_ends[cp.p][1]);
    const Pt c = pt(chord_ends[cp.q][0]), d = pt(chord_ends[cp.q][1]);
    if (orient(a, b, c) * orient(a, b, d) >= 0) return 0;
    if (orient(c, d, a) * orient(c, d, b) >= 0) return 0;
    const long long cr = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    return cr > 0 ? 1 : -1;
  }

  void reindex(int band) {
    for (std::size_t i = 0; i < order[band].size(); ++i) pos_in_band[band][order[band][i]] = static_cast<int>(i);
  }

  std::multiset<Key> current_keys() const {
    std::vector<Crossing> xs;
    for (const ChordPair& cp : pairs) {
      const int e = crossing_sign(cp);
      if (e == 0) continue;
      xs.push_back({chord_id[cp.p].first, chord_id[cp.p].second, chord_id[cp.q].first,
                    chord_id[cp.q].second, e});
    }
    return keys(curves, xs);
  }

  void dfs(std::size_t step, std::size_t count) {
    if (aborted || found_target) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    for (int idx : decided_at[step])
      if (crossing_sign(pairs[idx]) != 0) ++count;
    if (strict ? count >= best : count > best) return;
    if (step == plan.size()) {
      if (strict) {
        best = count;
      } else if (target && current_keys() == *target) {
        found_target = true;
      }
      return;
    }
    const auto [band, st] = plan[step];
    auto& ord = order[band];
    std::size_t lowest = 0;
    if (anchor[step] >= 0) lowest = static_cast<std::size_t>(pos_in_band[band][anchor[step]]) + 1;
    for (std::size_t at = lowest; at <= ord.size(); ++at) {
      ord.insert(ord.begin() + static_cast<long>(at), st);
      reindex(band);
      dfs(step + 1, count);
      ord.erase(ord.begin() + static_cast<long>(at));
      pos_in_band[band][st] = -1;
      reindex(band);
      if (aborted || found_target) return;
    }
  }
};

}  // namespace

Certificate certify(const gt::Surface& s, const std::vector<Word>& curves, bool mixed_only,
                    const std::multiset<Key>* target, std::mt19937_64& rng, std::size_t node_budget) {
  Certificate cert;
  SearchResult heuristic = minimise(s, curves, rng, mixed_only, 120, 1);
  cert.min_crossings = heuristic.min_crossings;
  if (target && std::find(heuristic.minimal_keys.begin(), heuristic.minimal_keys.end(), *target) !=
                    heuristic.minimal_keys.end())
    cert.target_attained = true;
  if (heuristic.exhaustive) {
    cert.exact = true;
    cert.nodes = heuristic.evaluated;
    return cert;
  }
  BranchAndBound bb{s, curves, mixed_only, target, node_budget};
  bb.setup();
  bb.best = heuristic.min_crossings;
  bb.strict = true;
  bb.dfs(0, 0);
  cert.nodes = bb.nodes;
  if (bb.aborted) return cert;
  if (bb.best < cert.min_crossings) {
    cert.min_crossings = bb.best;
    cert.target_attained = false;
  }
  cert.exact = true;
  if (target && !cert.target_attained && target->size() == cert.min_crossings) {
    BranchAndBound again{s, curves, mixed_only, target, node_budget};
    again.setup();
    again.best = cert.min_crossings;
    again.strict = false;
    again.dfs(0, 0);
    cert.nodes += again.nodes;
    if (again.aborted) cert.exact = false;
    cert.target_attained = again.found_target;
  }
  return cert;
}

}  // namespace oracle
