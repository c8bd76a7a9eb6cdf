#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seifert/star_graph.hpp"

namespace seifert {

// Identifies a curve in the expanded graph: the central curve "C", or the
// j-th curve of arm i counted outward from the node, "E<i>.<j>" (1-based).
struct VertexLabel {
    int arm = 0;   // 0 for the central curve
    int pos = 0;   // position along the arm, 1 = adjacent to the node

    bool is_central() const { return arm == 0; }
    std::string str() const {
        return is_central() ? "C" : "E" + std::to_string(arm) + "." + std::to_string(pos);
    }
    friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
        return a.arm == b.arm && a.pos == b.pos;
    }
};

struct PlumbingVertex {
    Int self_intersection;   // -d for the central curve, -b_j on strings
    long genus = 0;          // nonzero only on the central curve
    VertexLabel label;
};

// Full resolution dual graph: the star with every arm expanded into its
// Hirzebruch-Jung string. Always a tree; vertex 0 is the central curve.
struct PlumbingGraph {
    std::vector<PlumbingVertex> vertices;
    std::vector<std::pair<int, int>> edges;
};

// Expands each arm n/q into the string [b_1, ..., b_s] = hj_expand(n, q),
// attached to the node at its b_1 end. Throws validation_error on structural
// problems (bad arms, genus); e <= 0 is deliberately allowed here so the
// lattice side can probe boundary cases.
PlumbingGraph expand(const StarGraph& sg);

// Dense symmetric integer matrix, row-major. Sizes here are desk-scale
// (a few hundred at most), so no sparse machinery.
class IntMatrix {
public:
    explicit IntMatrix(long n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    long size() const { return n_; }
    Int& at(long i, long j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(long i, long j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

private:
    long n_;
    std::vector<Int> a_;
};

// Intersection form of the exceptional configuration: diagonal entries are
// the self-intersections, off-diagonal entries 1 exactly on edges.
struct IntersectionMatrix {
    IntMatrix m;
    std::vector<VertexLabel> labels;
};

IntersectionMatrix intersection_matrix(const PlumbingGraph& pg);

// Exact Sylvester test via fraction-free elimination: M is negative definite
// iff the leading principal minors satisfy (-1)^k det M_k > 0 for all k.
// A zero pivot means some leading minor vanishes, which already rules
// definiteness out.
bool is_negative_definite(const IntMatrix& m);
inline bool is_negative_definite(const IntersectionMatrix& im) { return is_negative_definite(im.m); }

} // namespace seifert
