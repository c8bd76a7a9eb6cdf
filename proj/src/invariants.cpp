#include "seifert/invariants.hpp"

#include "seifert/continued_fraction.hpp"

namespace seifert {

Rational euler_e(const StarGraph& sg) {
    require_arms(sg);
    Rational e = Rational(sg.d);
    for (const Arm& a : sg.arms) e -= Rational(a.q, a.n);
    return e;
}

Rational chi(const StarGraph& sg) {
    require_arms(sg);
    Rational c = Rational(2 * sg.genus - 2);
    for (const Arm& a : sg.arms) c += Rational(1) - Rational(Int(1), a.n);
    return c;
}

SeifertInvariants seifert_invariants(const StarGraph& sg) {
    require_star_domain(sg);
    SeifertInvariants inv;
    inv.e = euler_e(sg);
    inv.chi = chi(sg);
    inv.beta = inv.chi / inv.e;
    inv.alpha = Rational(-1) - inv.beta;
    return inv;
}

GradedDiscrepancy graded_discrepancy(const StarGraph& sg) {
    SeifertInvariants inv = seifert_invariants(sg);
    return {inv.alpha, sg.genus >= 1};
}

namespace {

// Dual cycles of a single string with self-intersections -b_1, ..., -b_s:
// e_first = -M^{-1} delta_1 and e_last = -M^{-1} delta_s. Their coefficients
// are positive, with the known values q/n, 1/n (respectively 1/n, q'/n) at
// the two ends.
struct StringDuals {
    std::vector<Rational> e_first;
    std::vector<Rational> e_last;
};

StringDuals string_duals(const HJExpansion& s) {
    long len = static_cast<long>(s.entries.size());
    IntMatrix m(len);
    for (long i = 0; i < len; ++i) {
        m.at(i, i) = -s.entries[i];
        if (i + 1 < len) {
            m.at(i, i + 1) = 1;
            m.at(i + 1, i) = 1;
        }
    }
    std::vector<Rational> d1(len), ds(len);
    d1[0] = -1;
    ds[len - 1] = -1;
    return {solve_exact(m, d1), solve_exact(m, ds)};
}

std::string ratstr(const Rational& r) { return r.str(); }

void check_equal(const Rational& got, const Rational& want, const char* what) {
    if (got != want)
        throw consistency_error(std::string("canonical cycle: ") + what + " is " + ratstr(got) +
                                ", closed form says " + ratstr(want));
}

} // namespace

CanonicalCycle canonical_cycle_closed_form(const StarGraph& sg) {
    SeifertInvariants inv = seifert_invariants(sg);
    const Rational& beta = inv.beta;

    CanonicalCycle cc;
    // Central curve: the -K coefficient is 1 + chi/e, i.e. k_C = -1 - beta.
    cc.k.push_back(Rational(-1) - beta);
    cc.labels.push_back(VertexLabel{0, 0});

    for (size_t i = 0; i < sg.arms.size(); ++i) {
        const Arm& a = sg.arms[i];
        HJExpansion s = hj_expand(a.n, a.q);
        StringDuals duals = string_duals(s);
        size_t len = s.entries.size();

        // The solved dual cycles must reproduce their known end values.
        Int qp = mod_inverse(a.q, a.n);
        check_equal(duals.e_first.front(), Rational(a.q, a.n), "e_1 at the node end");
        check_equal(duals.e_first.back(), Rational(Int(1), a.n), "e_1 at the far end");
        check_equal(duals.e_last.front(), Rational(Int(1), a.n), "e_s at the node end");
        check_equal(duals.e_last.back(), Rational(qp, a.n), "e_s at the far end");

        // String part of Z = -(K+E): Y = beta*e_1 - e_s, so k_j = -Y_j - 1.
        for (size_t j = 0; j < len; ++j) {
            Rational z = beta * duals.e_first[j] - duals.e_last[j];
            if (j == 0)
                check_equal(z, (beta * Rational(a.q) - Rational(1)) / Rational(a.n),
                            "Z at the curve adjacent to the node");
            if (j + 1 == len)
                check_equal(z, (beta - Rational(qp)) / Rational(a.n), "Z at the end curve");
            cc.k.push_back(-z - Rational(1));
            cc.labels.push_back(VertexLabel{static_cast<int>(i + 1), static_cast<int>(j + 1)});
        }
    }
    return cc;
}

Int k_order_numerical(const StarGraph& sg) {
    require_star_domain(sg);

    // Lattice-theoretic definition, always available: the order of the class
    // of K is the lcm of the coefficient denominators of the oracle solution.
    CanonicalCycle oracle = canonical_cycle_oracle(expand(sg));
    Int oracle_order = oracle.denominator_lcm();

    long t = sg.t();
    if (t < 2) return oracle_order;   // too few arms for the subset formula

    // Subset formula: the lcm of the denominators of any t-1 of the terms
    // (chi/e - q'_k)/n_k. Every choice of omitted arm must give the same
    // value, and that value must match the lattice order.
    Rational beta = chi(sg) / euler_e(sg);
    std::vector<Int> term_den;
    term_den.reserve(sg.arms.size());
    for (const Arm& a : sg.arms) {
        Rational term = (beta - Rational(mod_inverse(a.q, a.n))) / Rational(a.n);
        term_den.push_back(term.den());
    }

    Int common = 0;
    for (long omit = 0; omit < t; ++omit) {
        Int L = 1;
        for (long j = 0; j < t; ++j)
            if (j != omit) L = lcm(L, term_den[j]);
        if (omit == 0)
            common = L;
        else if (L != common)
            throw consistency_error("k_order_numerical: subsets disagree (" + common.get_str() +
                                    " vs " + L.get_str() + " omitting arm " + std::to_string(omit + 1) + ")");
    }

    if (common != oracle_order)
        throw consistency_error("k_order_numerical: subset value " + common.get_str() +
                                " != lattice order " + oracle_order.get_str());
    return common;
}

Rational discrepancy_shift(const Rational& alpha_sub, const Int& d) {
    if (d <= 0)
        throw validation_error("discrepancy_shift: section weight must be positive, got " + d.get_str());
    return alpha_sub + Rational(d);
}

Rational cone_discrepancy(const Int& m, const Int& n) {
    if (n == 0) throw validation_error("cone_discrepancy: n must be nonzero");
    return Rational(-1) - Rational(m, n);
}

bool section_condition_check(const std::vector<Int>& weights, const SectionCase& c) {
    if (weights.empty()) throw validation_error("section_condition_check: empty weight list");
    Int all = 0;
    for (const Int& w : weights) {
        if (w <= 0) throw validation_error("section_condition_check: weights must be positive");
        all = gcd(all, w);
    }
    if (all != 1)
        throw validation_error("section_condition_check: weights must have gcd 1, got gcd = " + all.get_str());

    if (c.kind == SectionCase::Kind::in_maximal_ideal_square) return true;

    if (c.index >= weights.size())
        throw validation_error("section_condition_check: coordinate index out of range");
    Int rest = 0;
    for (size_t i = 0; i < weights.size(); ++i)
        if (i != c.index) rest = gcd(rest, weights[i]);
    return rest == 1;
}

} // namespace seifert
