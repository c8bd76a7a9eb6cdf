#pragma once

#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

// Hirzebruch-Jung (negative-regular) continued fraction expansion
//   n/q = b_1 - 1/(b_2 - 1/(... - 1/b_s)),   all b_i >= 2.
// The b_i are the self-intersection numbers (negated) of the resolution
// string of the cyclic quotient of type n/q.
struct HJExpansion {
    std::vector<Int> entries;   // b_1, ..., b_s, every entry >= 2, s >= 1
};

// Requires 0 < q < n with gcd(n, q) = 1; throws validation_error otherwise.
HJExpansion hj_expand(const Int& n, const Int& q);

// Evaluates b_1 - 1/(b_2 - ...) exactly. Rejects entries <= 1.
Rational hj_eval(const HJExpansion& e);

// The inverse q' of q modulo n, normalized into (0, n]. Expanding n/q'
// produces the b_i of n/q in reverse order.
Int mod_inverse(const Int& q, const Int& n);

} // namespace seifert
