#pragma once

#include <vector>

#include "seifert/lattice.hpp"
#include "seifert/star_graph.hpp"

namespace seifert {

// e = d - sum q_i/n_i: the (negated) Euler number of the Seifert fibration;
// positive exactly when the star graph is a singularity graph.
// chi = 2g - 2 + sum (1 - 1/n_i): the orbifold Euler characteristic of the
// base curve. Both need only structurally valid arms; sign checks are the
// caller's business (validate_star reports e <= 0 as an error).
Rational euler_e(const StarGraph& sg);
Rational chi(const StarGraph& sg);

struct SeifertInvariants {
    Rational e;
    Rational chi;
    Rational beta;    // chi / e
    Rational alpha;   // -1 - chi/e, the graded discrepancy
};

// Requires the star-formula domain: valid graph, e > 0, and not the cyclic
// quotient range (g = 0, t <= 2).
SeifertInvariants seifert_invariants(const StarGraph& sg);

struct GradedDiscrepancy {
    Rational alpha;
    // At g = 0 (t >= 3) the singularity is automatically Q-Gorenstein and the
    // formula is unconditional. For g >= 1 it presumes K Q-Cartier, which the
    // graph alone does not determine, so the value ships with this flag set.
    bool assumes_q_gorenstein;
};

GradedDiscrepancy graded_discrepancy(const StarGraph& sg);

// Builds K from the star structure alone: the central coefficient is
// -1 - chi/e, and each arm is the string cycle Y = beta*e_1 - e_s where
// e_1, e_s are the dual cycles of the string's own intersection matrix
// (computed by per-string exact solves). Endpoint coefficients are asserted
// against their closed forms (beta*q - 1)/n and (beta - q')/n, with
// consistency_error on any mismatch. Vertex order matches expand(sg).
CanonicalCycle canonical_cycle_closed_form(const StarGraph& sg);

// Order of the class of K in the discriminant group. For t >= 2 this is the
// least common denominator of the terms (chi/e - q'_k)/n_k taken over any
// t-1 of the arms; all t subset choices are computed and must agree, and the
// result must equal the lcm of the oracle-cycle coefficient denominators
// (consistency_error otherwise). For t <= 1 the subset form degenerates, so
// the oracle-denominator definition is used directly.
Int k_order_numerical(const StarGraph& sg);

// Discrepancy additivity under a negative-weight hypersurface section of
// weight d: alpha(X) = alpha(X') + d. Rejects d <= 0.
Rational discrepancy_shift(const Rational& alpha_sub, const Int& d);

// Graded cone over a polarized variety with K_Y^n = L^m: alpha = -1 - m/n.
// Rejects n = 0.
Rational cone_discrepancy(const Int& m, const Int& n);

// How a graded hypersurface f cuts the ambient weighted space: either f is
// the coordinate z_j (arithmetic condition: the remaining weights must be
// coprime as a set), or f lies in the square of the maximal ideal (no
// condition).
struct SectionCase {
    enum class Kind { coordinate, in_maximal_ideal_square };
    Kind kind;
    size_t index = 0;   // 0-based index of the dropped coordinate

    static SectionCase coordinate(size_t j) { return {Kind::coordinate, j}; }
    static SectionCase in_square() { return {Kind::in_maximal_ideal_square, 0}; }
};

// Requires positive weights with overall gcd 1 (minimal generator
// convention). Returns whether the section condition holds.
bool section_condition_check(const std::vector<Int>& weights, const SectionCase& c);

} // namespace seifert
