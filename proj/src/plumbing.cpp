#include "seifert/plumbing.hpp"

#include "seifert/continued_fraction.hpp"

namespace seifert {

PlumbingGraph expand(const StarGraph& sg) {
    // Structural validation only: an e <= 0 graph still expands to a
    // perfectly good tree whose matrix just fails the definiteness test.
    require_arms(sg);

    PlumbingGraph pg;
    pg.vertices.push_back({-sg.d, sg.genus, VertexLabel{0, 0}});
    for (size_t i = 0; i < sg.arms.size(); ++i) {
        HJExpansion s = hj_expand(sg.arms[i].n, sg.arms[i].q);
        int prev = 0;   // b_1 attaches to the node
        for (size_t j = 0; j < s.entries.size(); ++j) {
            int cur = static_cast<int>(pg.vertices.size());
            pg.vertices.push_back({-s.entries[j], 0,
                                   VertexLabel{static_cast<int>(i + 1), static_cast<int>(j + 1)}});
            pg.edges.emplace_back(prev, cur);
            prev = cur;
        }
    }
    return pg;
}

IntersectionMatrix intersection_matrix(const PlumbingGraph& pg) {
    long n = static_cast<long>(pg.vertices.size());
    IntersectionMatrix im{IntMatrix(n), {}};
    im.labels.reserve(pg.vertices.size());
    for (long i = 0; i < n; ++i) {
        im.m.at(i, i) = pg.vertices[i].self_intersection;
        im.labels.push_back(pg.vertices[i].label);
    }
    for (auto [u, v] : pg.edges) {
        im.m.at(u, v) = 1;
        im.m.at(v, u) = 1;
    }
    return im;
}

bool is_negative_definite(const IntMatrix& m) {
    long n = m.size();
    if (n == 0) return true;

    // Fraction-free (Bareiss) elimination without row exchanges: after step k
    // the pivot a[k][k] equals the leading principal minor det M_{k+1}. For a
    // definite matrix every leading minor is nonzero (the restriction of a
    // definite form is definite), so hitting a zero pivot is itself a verdict.
    IntMatrix a = m;
    Int prev = 1;
    for (long k = 0; k < n; ++k) {
        const Int& minor_k = a.at(k, k);
        if (minor_k == 0) return false;
        bool minor_negative = minor_k < 0;
        if (minor_negative != (k % 2 == 0)) return false;   // need sign (-1)^(k+1)

        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * minor_k - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;   // exact division, Bareiss invariant
            }
        prev = minor_k;
    }
    return true;
}

} // namespace seifert
