#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dubrovnik/diagram.hpp"
#include "dubrovnik/laurent.hpp"

namespace testsupport {

using dubrovnik::Arc;
using dubrovnik::Diagram;
using dubrovnik::Laurent2Poly;

// Unreduced Kauffman bracket by state sum, as a Laurent polynomial in A
// (stored in the x slot). <O> = -A^2 - A^-2.
Laurent2Poly bracket(const Diagram& d);

// p(x = -A^3, y = A - A^-1) * (A - A^-1)^shift, in the x slot. The shift
// clears negative powers of y; it must be at least -min_deg_y(p).
Laurent2Poly bracket_specialization(const Laurent2Poly& p, int shift);

// Checks lambda(d) against the state sum under the specialization.
bool agrees_with_bracket(const Laurent2Poly& lambda, const Diagram& d);

// Closure of a braid word on `strands` strands; generator i > 0 is a
// positive crossing of strands i, i+1, -i its inverse.
Diagram braid_closure(int strands, const std::vector<int>& word);

// Faces as cycles of (crossing, slot) darts; each dart leaves its crossing
// through that slot with the face on its right.
struct Dart {
  std::size_t crossing;
  int slot;
  friend bool operator==(const Dart&, const Dart&) = default;
};
std::vector<std::vector<Dart>> faces(const Diagram& d);
// Euler characteristic check on every crossing-connected piece.
bool is_planar(const Diagram& d);

// Reidemeister I: a kink of the given sign on `arc`.
Diagram r1_kink(const Diagram& d, Arc arc, bool positive);

// Reidemeister II: a finger of the edge at `e` pushed across their common
// face over (or under) the edge at `f`. Returns nullopt when e and f are not
// distinct arcs of one face.
std::optional<Diagram> r2_finger(const Diagram& d, Dart e, Dart f, bool e_over);
// A random R2 on a random face.
std::optional<Diagram> random_r2(const Diagram& d, std::mt19937_64& rng);

// Reidemeister III on every triangular face where it applies.
std::vector<Diagram> r3_moves(const Diagram& d);

// Random polynomial with up to `terms` terms, exponents in [-span, span].
Laurent2Poly random_poly(std::mt19937_64& rng, int terms = 5, int span = 4, int coeff = 9);

// Random relabeling (arc ids and crossing order) of d.
Diagram random_relabel(const Diagram& d, std::mt19937_64& rng);

}  // namespace testsupport
