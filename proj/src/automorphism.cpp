#include "gt/automorphism.hpp"

#include <numeric>

#include "gt/error.hpp"

namespace gt {

Word substitute(std::span<const Word> images, std::span<const Letter> w) {
  Word out;
  for (const Letter& l : w) {
    const Word& im = images[l.gen];
    if (l.inverse) {
      for (auto it = im.rbegin(); it != im.rend(); ++it) out.push_back(it->inv());
    } else {
      out.insert(out.end(), im.begin(), im.end());
    }
  }
  return free_reduce(out);
}

std::vector<Word> basis_inverse(int rank, std::span<const Word> images) {
  // Post-compose with Whitehead automorphisms while the total length drops;
  // a basis always admits such a move until it is a signed permutation.
  std::vector<Word> u(images.begin(), images.end());
  for (Word& w : u) w = free_reduce(w);
  std::vector<Word> acc(rank);  // composite of the moves applied so far
  for (int k = 0; k < rank; ++k) acc[k] = {Letter{k, false}};
  auto total = [](const std::vector<Word>& v) {
    std::size_t t = 0;
    for (const Word& w : v) t += w.size();
    return t;
  };
  std::size_t len = total(u);
  std::vector<Word> move(rank);
  while (len > static_cast<std::size_t>(rank)) {
    bool found = false;
    for (int ag = 0; ag < rank && !found; ++ag)
      for (int ai = 0; ai < 2 && !found; ++ai) {
        const Letter a{ag, ai == 1};
        long long combos = 1;
        for (int k = 1; k < rank; ++k) combos *= 4;
        for (long long code = 1; code < combos && !found; ++code) {
          long long c = code;
          for (int k = 0; k < rank; ++k) {
            if (k == ag) {
              move[k] = {Letter{k, false}};
              continue;
            }
            const Letter x{k, false};
            switch (c % 4) {
              case 0: move[k] = {x}; break;
              case 1: move[k] = {x, a}; break;
              case 2: move[k] = {a.inv(), x}; break;
              default: move[k] = {a.inv(), x, a}; break;
            }
            c /= 4;
          }
          std::vector<Word> cand(rank);
          for (int k = 0; k < rank; ++k) cand[k] = substitute(move, u[k]);
          const std::size_t l = total(cand);
          if (l < len) {
            u = std::move(cand);
            for (int k = 0; k < rank; ++k) acc[k] = substitute(move, acc[k]);
            len = l;
            found = true;
          }
        }
      }
    if (!found) return {};
  }
  // now acc∘phi is a signed permutation p; phi^{-1} = p^{-1}∘acc
  std::vector<Word> pinv(rank);
  std::vector<char> hit(rank, 0);
  for (int k = 0; k < rank; ++k) {
    if (u[k].size() != 1) return {};
    const Letter l = u[k][0];
    if (hit[l.gen]) return {};
    hit[l.gen] = 1;
    pinv[l.gen] = {Letter{k, l.inverse}};
  }
  std::vector<Word> inv(rank);
  for (int k = 0; k < rank; ++k) inv[k] = substitute(pinv, acc[k]);
  return inv;
}

FreeGroupAuto FreeGroupAuto::identity(const Surface& s) {
  std::vector<Word> id(s.rank());
  for (int k = 0; k < s.rank(); ++k) id[k] = {Letter{k, false}};
  return FreeGroupAuto(s, id, id);
}

FreeGroupAuto FreeGroupAuto::from_images(const Surface& s, std::vector<Word> images) {
  if (static_cast<int>(images.size()) != s.rank())
    throw Error(ErrorCode::NotMappingClass, "automorphism needs one image per generator");
  for (Word& w : images) w = free_reduce(w);
  std::vector<Word> inv = basis_inverse(s.rank(), images);
  if (inv.empty()) throw Error(ErrorCode::NotMappingClass, "images do not form a free basis");
  for (int k = 0; k < s.rank(); ++k)
    if (substitute(images, inv[k]) != Word{Letter{k, false}})
      throw InternalError("Nielsen inverse failed to invert");
  return FreeGroupAuto(s, std::move(images), std::move(inv));
}

FreeGroupAuto FreeGroupAuto::with_inverse(const Surface& s, std::vector<Word> images,
                                          std::vector<Word> inverse) {
  for (int k = 0; k < s.rank(); ++k)
    if (substitute(images, inverse[k]) != Word{Letter{k, false}} ||
        substitute(inverse, images[k]) != Word{Letter{k, false}})
      throw InternalError("supplied inverse does not invert");
  return FreeGroupAuto(s, std::move(images), std::move(inverse));
}

Word FreeGroupAuto::apply(std::span<const Letter> w) const { return substitute(images_, w); }

CyclicWord FreeGroupAuto::apply(const CyclicWord& w) const {
  return CyclicWord::from_letters(apply(w.letters()));
}

FreeGroupAuto FreeGroupAuto::inverse() const { return FreeGroupAuto(surface_, inverse_, images_); }

FreeGroupAuto operator*(const FreeGroupAuto& a, const FreeGroupAuto& b) {
  require_same_surface(a.surface_, b.surface_);
  std::vector<Word> im(b.images_.size()), inv(b.images_.size());
  for (std::size_t k = 0; k < im.size(); ++k) {
    im[k] = a.apply(b.images_[k]);
    inv[k] = substitute(b.inverse_, a.inverse_[k]);
  }
  return FreeGroupAuto(a.surface_, std::move(im), std::move(inv));
}

bool FreeGroupAuto::preserves_boundary() const {
  for (int j = 0; j < surface_.puncture_count(); ++j)
    if (CyclicWord::from_letters(apply(surface_.boundary_based(j))) != surface_.boundary_words()[j])
      return false;
  return true;
}

std::vector<std::vector<long long>> FreeGroupAuto::abelianization() const {
  const int r = surface_.rank();
  std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
  for (int k = 0; k < r; ++k)
    for (const Letter& l : images_[k]) m[l.gen][k] += l.sign();
  return m;
}

void require_mapping_class(const FreeGroupAuto& psi) {
  if (!psi.preserves_boundary())
    throw Error(ErrorCode::NotMappingClass, "automorphism does not preserve the boundary classes");
}

FreeGroupAuto twist_x(const Surface& s, int i) {
  auto im = FreeGroupAuto::identity(s).images();
  auto inv = im;
  im[s.y(i)] = {Letter{s.y(i), false}, Letter{s.x(i), false}};
  inv[s.y(i)] = {Letter{s.y(i), false}, Letter{s.x(i), true}};
  return FreeGroupAuto::with_inverse(s, im, inv);
}

FreeGroupAuto twist_y(const Surface& s, int i) {
  auto im = FreeGroupAuto::identity(s).images();
  auto inv = im;
  im[s.x(i)] = {Letter{s.x(i), false}, Letter{s.y(i), false}};
  inv[s.x(i)] = {Letter{s.x(i), false}, Letter{s.y(i), true}};
  return FreeGroupAuto::with_inverse(s, im, inv);
}

namespace {

// One elementary step of the dragged puncture, as a substitution of the
// current generators.
struct Step {
  enum Kind { CrossSlot, Band } kind;
  int slot = 0;
  Letter band{};
};

void apply_step(const Surface& s, int zgen, const Step& st, std::vector<Word>& images,
                std::vector<Word>& inverse) {
  const Letter z{zgen, false};
  std::vector<Word> sigma = FreeGroupAuto::identity(s).images();
  std::vector<Word> undo = sigma;
  if (st.kind == Step::CrossSlot) {
    const HalfEdge he = s.half_edge_order()[st.slot];
    if (he.gen == zgen) return;
    const Letter e{he.gen, false};
    if (he.end == EdgeEnd::Start) {
      sigma[he.gen] = {z.inv(), e};
      undo[he.gen] = {z, e};
    } else {
      sigma[he.gen] = {e, z};
      undo[he.gen] = {e, z.inv()};
    }
  } else {
    sigma[zgen] = {st.band, z, st.band.inv()};
    undo[zgen] = {st.band.inv(), z, st.band};
  }
  for (Word& w : images) w = substitute(sigma, w);
  for (Word& w : undo) w = substitute(inverse, w);
  inverse = std::move(undo);
}

}  // namespace

FreeGroupAuto point_push_automorphism(const Surface& s, int j, std::span<const Letter> alpha) {
  if (j < 1 || j > s.n())
    throw Error(ErrorCode::InvalidPuncture,
                "puncture " + std::to_string(j) + " cannot be pushed (need 1..n)");
  const int zgen = s.z(j);
  for (const Letter& l : alpha)
    if (l.gen == zgen)
      throw Error(ErrorCode::InvalidPuncture, "the push loop must avoid the pushed puncture");
  const int N = s.slot_count();
  const int home = s.end_slot(zgen);  // the puncture sits just counterclockwise of this slot
  std::vector<Word> images = FreeGroupAuto::identity(s).images();
  std::vector<Word> inverse = images;
  const Word a = free_reduce(alpha);
  for (const Letter& l : a) {
    std::vector<Step> steps;
    // clockwise from home to the exit slot
    for (int h = home; h != s.out_slot(l); h = (h - 1 + N) % N) steps.push_back({Step::CrossSlot, h, {}});
    steps.push_back({Step::Band, 0, l});
    // clockwise from the entry slot back home
    for (int h = (s.in_slot(l) - 1 + N) % N; h != (home + 1) % N; h = (h - 1 + N) % N)
      steps.push_back({Step::CrossSlot, h, {}});
    for (const Step& st : steps) apply_step(s, zgen, st, images, inverse);
  }
  return FreeGroupAuto::with_inverse(s, std::move(images), std::move(inverse));
}

}  // namespace gt

namespace gt {

std::vector<FreeGroupAuto> elementary_moves(const Surface& s) {
  std::vector<FreeGroupAuto> out;
  for (int i = 1; i <= s.genus(); ++i) {
    out.push_back(twist_x(s, i));
    out.push_back(twist_y(s, i));
  }
  for (int j = 1; j <= s.n(); ++j)
    for (int g = 0; g < s.rank(); ++g)
      if (g != s.z(j)) out.push_back(point_push_automorphism(s, j, Word{Letter{g, false}}));
  return out;
}

}  // namespace gt
