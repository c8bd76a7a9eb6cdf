#pragma once

#include <vector>

#include "seifert/plumbing.hpp"
#include "seifert/rational.hpp"

namespace seifert {

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Int determinant(IntMatrix m);

// Exact solution of m x = b for nonsingular m: fraction-free forward
// elimination on the augmented matrix, rational back-substitution, and a
// mandatory residual check (throws consistency_error if m x != b).
// Throws validation_error when m is singular.
std::vector<Rational> solve_exact(const IntMatrix& m, const std::vector<Rational>& b);

// Diagonal of the Smith normal form: nonnegative entries, each dividing the
// next, unit entries included, zeros (for singular input) last. The product
// of the entries equals |det m|.
std::vector<Int> smith_normal_form(IntMatrix m);

// The entries > 1 of the Smith diagonal: the invariant factors of coker(m)
// as an abstract group.
std::vector<Int> invariant_factors(const IntMatrix& m);

} // namespace seifert
