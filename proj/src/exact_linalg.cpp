#include "seifert/exact_linalg.hpp"

namespace seifert {

Int determinant(IntMatrix a) {
    long n = a.size();
    if (n == 0) return 1;

    // Bareiss elimination: every intermediate entry is a minor of the input,
    // and the division by the previous pivot is exact. Row exchanges only
    // flip the sign.
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k + 1 < n; ++k) {
        long p = -1;
        for (long i = k; i < n; ++i)
            if (a.at(i, k) != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != k) {
            for (long j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(k, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::vector<Rational> solve_exact(const IntMatrix& m, const std::vector<Rational>& b) {
    long n = m.size();
    if (static_cast<long>(b.size()) != n)
        throw validation_error("solve_exact: dimension mismatch");
    if (n == 0) return {};

    // Clear denominators so the augmented elimination stays over the integers;
    // the computed solution is then L times the true one.
    Int L = 1;
    for (const Rational& x : b) L = lcm(L, x.den());
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n + 1));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n] = b[i].num() * (L / b[i].den());
    }

    Int prev = 1;
    for (long k = 0; k < n; ++k) {
        long p = -1;
        for (long i = k; i < n; ++i)
            if (a[i][k] != 0) { p = i; break; }
        if (p < 0) throw validation_error("solve_exact: singular matrix");
        if (p != k) std::swap(a[p], a[k]);
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j <= n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }

    // Rational back-substitution on the triangular system, then undo the
    // denominator scaling.
    std::vector<Rational> x(n);
    for (long i = n - 1; i >= 0; --i) {
        Rational acc = a[i][n];
        for (long j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
        x[i] = acc / Rational(a[i][i]);
    }
    Rational scale = Rational(Int(1), L);
    for (Rational& xi : x) xi *= scale;

    // The residual check is not optional: it turns any elimination bug into a
    // loud consistency failure instead of a silently wrong invariant.
    for (long i = 0; i < n; ++i) {
        Rational acc = 0;
        for (long j = 0; j < n; ++j) acc += Rational(m.at(i, j)) * x[j];
        if (acc != b[i])
            throw consistency_error("solve_exact: nonzero residual in row " + std::to_string(i));
    }
    return x;
}

namespace {

// Position of a smallest-magnitude nonzero entry in the trailing submatrix,
// or (-1, -1) if it is entirely zero. Small pivots keep the reduction from
// blowing up intermediate entries.
std::pair<long, long> min_nonzero(const IntMatrix& a, long k) {
    long n = a.size(), pi = -1, pj = -1;
    Int best;
    for (long i = k; i < n; ++i)
        for (long j = k; j < n; ++j) {
            const Int& v = a.at(i, j);
            if (v == 0) continue;
            Int av = abs(v);
            if (pi < 0 || av < best) {
                best = av;
                pi = i;
                pj = j;
            }
        }
    return {pi, pj};
}

} // namespace

std::vector<Int> smith_normal_form(IntMatrix a) {
    long n = a.size();
    std::vector<Int> diag;
    diag.reserve(n);

    for (long k = 0; k < n; ++k) {
        auto [pi, pj] = min_nonzero(a, k);
        if (pi < 0) {
            // Trailing submatrix is zero: the remaining diagonal entries are 0.
            for (long r = k; r < n; ++r) diag.push_back(0);
            break;
        }

        for (;;) {
            std::tie(pi, pj) = min_nonzero(a, k);
            if (pi != k)
                for (long j = 0; j < n; ++j) std::swap(a.at(pi, j), a.at(k, j));
            if (pj != k)
                for (long i = 0; i < n; ++i) std::swap(a.at(i, pj), a.at(i, k));

            // Reduce column and row k by the pivot. Truncated quotients leave
            // remainders strictly smaller than the pivot, so if anything
            // survives, the next sweep picks a strictly smaller pivot and the
            // loop terminates.
            bool cleared = true;
            for (long i = k + 1; i < n; ++i) {
                if (a.at(i, k) == 0) continue;
                Int q = a.at(i, k) / a.at(k, k);
                if (q != 0)
                    for (long j = k; j < n; ++j) a.at(i, j) -= q * a.at(k, j);
                if (a.at(i, k) != 0) cleared = false;
            }
            for (long j = k + 1; j < n; ++j) {
                if (a.at(k, j) == 0) continue;
                Int q = a.at(k, j) / a.at(k, k);
                if (q != 0)
                    for (long i = k; i < n; ++i) a.at(i, j) -= q * a.at(i, k);
                if (a.at(k, j) != 0) cleared = false;
            }
            if (!cleared) continue;

            // Divisibility fixup: the pivot must divide the whole trailing
            // submatrix or later diagonal entries would break the chain.
            bool fixed = false;
            for (long i = k + 1; i < n && !fixed; ++i)
                for (long j = k + 1; j < n && !fixed; ++j)
                    if (a.at(i, j) % a.at(k, k) != 0) {
                        for (long c = 0; c < n; ++c) a.at(k, c) += a.at(i, c);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        diag.push_back(abs(a.at(k, k)));
    }
    return diag;
}

std::vector<Int> invariant_factors(const IntMatrix& m) {
    std::vector<Int> out;
    for (const Int& d : smith_normal_form(m))
        if (d > 1) out.push_back(d);
    return out;
}

} // namespace seifert
