#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>

#include "gt/automorphism.hpp"
#include "gt/bialgebra.hpp"
#include "gt/loops.hpp"

namespace gt {

// Random cyclically reduced class with min_len <= length <= max_len (min_len >= 1).
CyclicWord random_class(const Surface& s, std::mt19937_64& rng, int min_len, int max_len);
Framing random_framing(const Surface& s, std::mt19937_64& rng, long long bound);
// Product of 1..steps elementary moves or their inverses.
FreeGroupAuto random_mapping_class(const Surface& s, std::mt19937_64& rng, int steps);

bool antisymmetry_holds(const Surface& s, const LoopCombo& a, const LoopCombo& b);
bool jacobi_holds(const Surface& s, const LoopCombo& a, const LoopCombo& b, const LoopCombo& c);
bool cojacobi_holds(const Framing& xi, const LoopCombo& a);
// δ{a,b} = a·δb − b·δa
bool compatibility_holds(const Framing& xi, const LoopCombo& a, const LoopCombo& b);
// bracket ∘ δ = 0
bool involutivity_holds(const Framing& xi, const LoopCombo& a);
bool kink_independence_holds(const Framing& xi, const KinkedLoop& w);
bool poincare_hopf_holds(const Framing& xi);
// f(ψ'ψ'') = f(ψ') + ψ'_* f(ψ'')
bool cocycle_holds(const Framing& xi, const FreeGroupAuto& p1, const FreeGroupAuto& p2);
// f(push of puncture j around α) = d_j (α · −) on the handle basis
bool point_push_cocycle_holds(const Framing& xi, int j, std::span<const Letter> alpha);

struct Tally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  void record(bool ok) { ok ? ++pass : ++fail; }
};

using SuiteReport = std::map<std::string, Tally>;

// Random sampling of every invariant above on one surface.
SuiteReport run_invariant_suite(const Surface& s, int samples, std::uint64_t seed, int max_len = 6);

}  // namespace gt
