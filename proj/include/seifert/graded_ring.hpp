#pragma once

#include <optional>
#include <vector>

#include "seifert/star_graph.hpp"

namespace seifert {

// Divisor data of the graded ring A = sum_k H^0(floor(k E)) on the central
// curve, where E = D - sum (q_i/n_i) P_i and deg D = d. At genus 0 the point
// positions and the class of D are irrelevant (degree determines everything),
// so the graph data is the whole story; the genus is carried so the g >= 1
// necessary-condition path can share this type, but dimension formulas are
// genus-0 only.
struct DemazureData {
    long genus = 0;
    Int d = 0;
    std::vector<Arm> arms;

    static DemazureData from_star(const StarGraph& sg);

    Rational deg_E() const;    // = e
    Rational deg_Xi() const;   // = chi, for Xi = K + sum (1 - 1/n_i) P_i
};

// deg floor(kE) = k d - sum ceil(k q_i / n_i); k may be negative.
Int deg_floor_kE(const DemazureData& dd, const Int& k);

// dim A_k at genus 0: max(0, deg floor(kE) + 1). Rejects g >= 1 (dimensions
// there depend on the divisor class, not just its degree).
Int graded_dim(const DemazureData& dd, const Int& k);

// [dim A_0, ..., dim A_kmax].
std::vector<Int> poincare_series(const DemazureData& dd, long k_max);

// deg floor(Xi + kE) = -2 + k d + sum floor((n_i - 1 - k q_i) / n_i).
Int deg_floor_xi_plus_kE(const DemazureData& dd, const Int& k);

// Graded pieces of the dualizing module at genus 0:
// dim omega_k = max(0, deg floor(Xi + kE) + 1), for k in [k_min, k_max].
std::vector<Int> dualizing_dims(const DemazureData& dd, long k_min, long k_max);

// Gorenstein test at genus 0: A is Gorenstein iff t := chi/e is an integer
// with t q_i = 1 (mod n_i) for every arm; the degree condition
// deg floor(tE) = -2 then comes for free but is asserted anyway. Returns t
// or nothing.
std::optional<Int> gorenstein_test(const DemazureData& dd);

struct QGorensteinOrder {
    Int s;   // smallest s >= 1 with t := s chi/e integral and t q_i = s (mod n_i)
    Int t;
    // True at genus 0, where s is the honest order of K (s K Cartier). For
    // g >= 1 the pair (s, t) is only a necessary condition: whether the
    // degree-0 class Xi - (chi/e) E is torsion of order dividing s needs the
    // Jacobian of the curve, which the graph does not determine.
    bool torsion_decided = false;
};

// Requires e > 0. The search runs over multiples of denominator(chi/e) and
// is bounded by denominator(chi/e) * lcm(n_i), which provably satisfies both
// conditions, so it always terminates with a certificate.
QGorensteinOrder q_gorenstein_order(const DemazureData& dd);

} // namespace seifert
