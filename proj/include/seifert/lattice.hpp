#pragma once

#include <string>
#include <vector>

#include "seifert/exact_linalg.hpp"
#include "seifert/plumbing.hpp"

namespace seifert {

// The cokernel of the intersection matrix: the finite group dual-lattice /
// lattice. Its order is |det M|.
struct DiscriminantGroup {
    std::vector<Int> factors;   // invariant factors > 1, divisibility chain
    Int order;                  // product of the full Smith diagonal = |det M|

    bool trivial() const { return factors.empty(); }
    std::string str() const;    // "trivial" or "Z/3 x Z/9"
};

// Requires a negative-definite intersection matrix (in particular
// nonsingular); throws validation_error otherwise.
DiscriminantGroup discriminant_group(const PlumbingGraph& pg);

// Coefficients of the canonical class K written on the exceptional curves,
// indexed like pg.vertices. The defining property is adjunction:
// (sum k_j E_j) . E_i = 2 g_i - 2 - E_i^2 for every i.
struct CanonicalCycle {
    std::vector<Rational> k;
    std::vector<VertexLabel> labels;

    // The cycle Z = -(K + E): z_i = -k_i - 1.
    Rational z(size_t i) const { return -k[i] - Rational(1); }

    // lcm of the coefficient denominators: the order of the class of K in
    // the discriminant group.
    Int denominator_lcm() const {
        Int L = 1;
        for (const Rational& c : k) L = lcm(L, c.den());
        return L;
    }
};

// Solves the adjunction system directly with the exact solver. This is the
// oracle route: no structure of the star shape is used, so it independently
// checks the closed-form construction in the invariants module.
CanonicalCycle canonical_cycle_oracle(const PlumbingGraph& pg);

} // namespace seifert
