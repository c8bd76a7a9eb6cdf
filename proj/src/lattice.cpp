#include "seifert/lattice.hpp"

namespace seifert {

std::string DiscriminantGroup::str() const {
    if (factors.empty()) return "trivial";
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += "Z/" + factors[i].get_str();
    }
    return out;
}

DiscriminantGroup discriminant_group(const PlumbingGraph& pg) {
    IntersectionMatrix im = intersection_matrix(pg);
    if (!is_negative_definite(im.m))
        throw validation_error("discriminant_group: intersection matrix is not negative definite");

    DiscriminantGroup g;
    g.order = 1;
    for (const Int& d : smith_normal_form(im.m)) {
        g.order *= d;   // no zero entries: definite matrices are nonsingular
        if (d > 1) g.factors.push_back(d);
    }

    // Cross-check against the independent determinant route.
    const Int det_abs = abs(determinant(im.m));
    if (det_abs != g.order)
        throw consistency_error("discriminant_group: Smith diagonal product " + g.order.get_str() +
                                " != |det| = " + det_abs.get_str());
    return g;
}

CanonicalCycle canonical_cycle_oracle(const PlumbingGraph& pg) {
    IntersectionMatrix im = intersection_matrix(pg);
    if (!is_negative_definite(im.m))
        throw validation_error("canonical_cycle_oracle: intersection matrix is not negative definite");

    long n = im.m.size();
    std::vector<Rational> rhs(n);
    for (long i = 0; i < n; ++i)
        rhs[i] = Rational(2 * pg.vertices[i].genus - 2) - Rational(im.m.at(i, i));

    CanonicalCycle cc;
    cc.k = solve_exact(im.m, rhs);   // solve_exact already verifies the residual
    cc.labels = im.labels;
    return cc;
}

} // namespace seifert
