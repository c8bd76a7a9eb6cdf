#include "seifert/continued_fraction.hpp"

namespace seifert {

HJExpansion hj_expand(const Int& n, const Int& q) {
    if (q <= 0) throw validation_error("hj_expand: q must be positive, got q = " + q.get_str());
    if (q >= n) throw validation_error("hj_expand: need 0 < q < n, got n = " + n.get_str() + ", q = " + q.get_str());
    if (gcd(n, q) != 1)
        throw validation_error("hj_expand: n and q must be coprime, got n = " + n.get_str() + ", q = " + q.get_str());

    // b = ceil(a/b'), then (a, b') <- (b', b*b' - a). The remainder b*b' - a
    // lies in [0, b'), so the second component strictly decreases and the
    // recursion stops exactly when it divides; coprimality makes the final
    // quotient 1, so every step has a/b' > 1 and hence b >= 2.
    HJExpansion out;
    Int a = n, b = q;
    while (b > 0) {
        Int c = ceil_div(a, b);
        out.entries.push_back(c);
        Int r = c * b - a;
        a = b;
        b = r;
    }
    return out;
}

Rational hj_eval(const HJExpansion& e) {
    if (e.entries.empty()) throw validation_error("hj_eval: empty expansion");
    for (const Int& b : e.entries)
        if (b < 2) throw validation_error("hj_eval: entries must be >= 2, got " + b.get_str());

    // Fold from the right: x <- b_i - 1/x. With all entries >= 2 every
    // intermediate value stays > 1, so the division below never degenerates.
    Rational x = e.entries.back();
    for (auto it = e.entries.rbegin() + 1; it != e.entries.rend(); ++it)
        x = Rational(*it) - Rational(1) / x;
    return x;
}

Int mod_inverse(const Int& q, const Int& n) {
    if (n <= 0) throw validation_error("mod_inverse: modulus must be positive");
    if (q <= 0) throw validation_error("mod_inverse: q must be positive");
    if (gcd(q, n) != 1)
        throw validation_error("mod_inverse: q = " + q.get_str() + " and n = " + n.get_str() + " are not coprime");

    if (n == 1) return 1;   // the degenerate modulus; normalized representative in (0, 1] is 1

    Int inv;
    mpz_invert(inv.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());   // result in [0, n)
    if (inv == 0) inv = n;                                       // normalize into (0, n]
    return inv;
}

} // namespace seifert
