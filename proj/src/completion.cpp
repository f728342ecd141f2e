#include "gt/completion.hpp"

#include <unordered_map>

#include "gt/error.hpp"

namespace gt {

WeightTable weight_table(const Surface& s) { return WeightTable(s.genus(), s.n()); }

std::string series_letter_name(const Surface& s, int gen) {
  std::string name = s.generator_name(gen);
  for (char& c : name)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  return name;
}

Expansion Expansion::from_images(const Surface& s, int N, std::vector<Series> images) {
  if (N < 2) throw Error(ErrorCode::NotDefined, "truncation must be at least 2");
  if (static_cast<int>(images.size()) != s.rank())
    throw Error(ErrorCode::NotDefined, "expansion needs one image per generator");
  const WeightTable w = weight_table(s);
  Expansion e;
  e.s_ = s;
  e.N_ = N;
  for (int g = 0; g < s.rank(); ++g) {
    const Series& im = images[g];
    if (!(im.weights() == w) || im.truncation() != N)
      throw Error(ErrorCode::NotDefined, "expansion image has the wrong shape");
    if (im.coefficient({}) != 1)
      throw Error(ErrorCode::NotDefined, "expansion image must have constant term 1");
    Series lead = series_log(im).homogeneous(w.of(g));
    for (int k = 1; k < w.of(g); ++k)
      if (!series_log(im).homogeneous(k).is_zero())
        throw Error(ErrorCode::NotDefined, "expansion image has a term below its letter weight");
    if (!(lead == Series::letter(w, N, g)))
      throw Error(ErrorCode::NotDefined, "expansion image must start with its own letter");
    e.inverses_.push_back(series_inverse(im));
  }
  e.images_ = std::move(images);
  return e;
}

Expansion exp_expansion(const Surface& s, int N) {
  const WeightTable w = weight_table(s);
  std::vector<Series> images;
  for (int g = 0; g < s.rank(); ++g) images.push_back(series_exp(Series::letter(w, N, g)));
  return Expansion::from_images(s, N, std::move(images));
}

Series boundary_log_target(const Surface& s, int N) {
  const WeightTable w = weight_table(s);
  Series t(w, N);
  for (int i = 1; i <= s.genus(); ++i)
    t += commutator(Series::letter(w, N, s.x(i)), Series::letter(w, N, s.y(i)));
  for (int j = 1; j <= s.n(); ++j) t += Series::letter(w, N, s.z(j));
  return t;
}

Expansion boundary_adapted_expansion(const Surface& s, int N) {
  if (s.n() < 1) throw Error(ErrorCode::NotDefined, "boundary-adapted expansion needs n >= 1");
  const Expansion base = exp_expansion(s, N);
  Word prefix = s.boundary_based(0);
  prefix.pop_back();  // drop z_n
  const Series head = expand_word(base, prefix);
  std::vector<Series> images;
  for (int g = 0; g < s.rank(); ++g) images.push_back(base.image(g));
  images[s.z(s.n())] = series_inverse(head) * series_exp(boundary_log_target(s, N));
  return Expansion::from_images(s, N, std::move(images));
}

Series expand_word(const Expansion& th, std::span<const Letter> w) {
  Series out = Series::unit(weight_table(th.surface()), th.truncation());
  for (Letter l : w) {
    if (l.gen < 0 || l.gen >= th.surface().rank())
      throw Error(ErrorCode::UnknownGenerator, "letter outside the surface");
    out = out * th.image(l);
  }
  return out;
}

CyclicSeries expand_loop(const Expansion& th, const CyclicWord& w) {
  return CyclicSeries::project(expand_word(th, w.letters()));
}

CyclicSeries expand_loop(const Expansion& th, const LoopCombo& a) {
  CyclicSeries out(weight_table(th.surface()), th.truncation());
  for (const auto& [w, c] : a.terms()) {
    CyclicSeries t = expand_loop(th, w);
    t *= c;
    out += t;
  }
  return out;
}

void CyclicTensor::add(const Monomial& l, const Monomial& r, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.try_emplace({l, r}, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

CyclicTensor expand_pair(const Expansion& th, const BiLoopCombo& t) {
  CyclicTensor out;
  out.N = th.truncation();
  std::map<CyclicWord, CyclicSeries> cache;
  auto ex = [&](const CyclicWord& w) -> const CyclicSeries& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, expand_loop(th, w)).first;
    return it->second;
  };
  for (const auto& [key, c] : t.terms()) {
    const CyclicSeries& l = ex(key.first);
    const CyclicSeries& r = ex(key.second);
    for (int wl = 0; wl <= out.N; ++wl)
      for (int wr = 0; wl + wr <= out.N; ++wr)
        for (const auto& [ml, cl] : l.components()[wl])
          for (const auto& [mr, cr] : r.components()[wr]) out.add(ml, mr, c * cl * cr);
  }
  return out;
}

std::optional<int> weight_level(const CyclicTensor& t, const WeightTable& w) {
  std::optional<int> best;
  for (const auto& [key, c] : t.terms) {
    const int wt = w.of(key.first) + w.of(key.second);
    if (!best || wt < *best) best = wt;
  }
  return best;
}

BoundaryDefect boundary_defect(const Expansion& th) {
  const Surface& s = th.surface();
  const Series lg = series_log(expand_word(th, s.boundary_based(0)));
  BoundaryDefect out;
  out.weight2 = lg.homogeneous(2);
  out.defect = lg - out.weight2;
  out.weight2_ok = out.weight2 == boundary_log_target(s, th.truncation()).homogeneous(2);
  return out;
}

Rational augmentation(const LoopCombo& a) {
  Rational e = 0;
  for (const auto& [w, c] : a.terms()) e += c;
  return e;
}

namespace {

LoopCombo reduced(const LoopCombo& a) {
  LoopCombo out = a;
  out.add(CyclicWord{}, -augmentation(a));
  return out;
}

std::vector<WeightCount> excess(const std::vector<std::size_t>& counts, std::optional<int> bound) {
  std::vector<WeightCount> out;
  if (!bound) return out;
  for (int k = 0; k < static_cast<int>(counts.size()); ++k)
    if (k > *bound && counts[k] > 0) out.push_back({k, counts[k]});
  return out;
}

}  // namespace

FiltrationReport filtration_report(const Expansion& th, const Framing& xi, const LoopCombo& a,
                                   const LoopCombo& b) {
  const Surface& s = th.surface();
  require_same_surface(s, xi.surface());
  const WeightTable w = weight_table(s);
  const int N = th.truncation();
  FiltrationReport r;
  r.p = weight_level(expand_loop(th, reduced(a)));
  r.q = weight_level(expand_loop(th, reduced(b)));

  const LoopCombo br = goldman_bracket(s, a, b);
  const CyclicSeries eb = expand_loop(th, reduced(br));
  r.bracket_level = weight_level(eb);
  if (r.p && r.q) r.bracket_bound = *r.p + *r.q - 2;
  // Anything at or beyond N+1 is invisible at this truncation, so only levels
  // below the bound and at most N count as violations.
  if (r.bracket_bound && r.bracket_level)
    r.bracket_ok = *r.bracket_level >= std::min(*r.bracket_bound, N + 1);
  std::vector<std::size_t> bc(N + 1, 0);
  for (int k = 0; k <= N; ++k) bc[k] = eb.components()[k].size();
  r.bracket_excess = excess(bc, r.bracket_bound);

  const BiLoopCombo co = turaev_cobracket(xi, a);
  const CyclicTensor et = expand_pair(th, co);
  r.cobracket_level = weight_level(et, w);
  if (r.p) r.cobracket_bound = *r.p - 2;
  if (r.cobracket_bound && r.cobracket_level)
    r.cobracket_ok = *r.cobracket_level >= std::min(*r.cobracket_bound, N + 1);
  std::vector<std::size_t> cc(N + 1, 0);
  for (const auto& [key, c] : et.terms) ++cc[w.of(key.first) + w.of(key.second)];
  r.cobracket_excess = excess(cc, r.cobracket_bound);

  r.boundary_ok = boundary_defect(th).defect.is_zero();
  return r;
}

}  // namespace gt
