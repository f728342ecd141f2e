#pragma once

#include <optional>
#include <vector>

#include "gt/automorphism.hpp"
#include "gt/loops.hpp"

namespace gt {

struct OrbitInvariants {
  std::vector<long long> d;
  std::optional<int> arf;         // g ≥ 1 and every d_j even
  std::optional<long long> a_inv; // g = 1
};

std::vector<long long> local_degrees(const Framing& xi);
int arf_invariant(const Framing& xi);
long long a_invariant(const Framing& xi);
OrbitInvariants orbit_invariants(const Framing& xi);

bool same_mcg_orbit(const Framing& xi0, const Framing& xi1);
bool quasi_algebraic_framing_exists(const Framing& xi);

// Nonseparating simple classes over which A is taken (genus one only).
const std::vector<CyclicWord>& a_invariant_family(const Surface& s);

Framing pushforward_framing(const FreeGroupAuto& psi, const Framing& xi);
// Values on x_1, y_1, ..., x_g, y_g.
std::vector<long long> framing_cocycle(const FreeGroupAuto& psi, const Framing& xi);

// Algebraic intersection on H1 of the filled surface: x_i·y_i = 1.
long long intersection_pairing(const Surface& s, std::span<const int> a, std::span<const int> b);

// Breadth-first closure of xi under elementary moves and their inverses,
// restricted to framings whose twists all lie in [-box, box].  Sorted by twists.
std::vector<Framing> orbit_in_box(const Framing& xi, long long box);

long long gcd_of(std::span<const long long> v);

}  // namespace gt
