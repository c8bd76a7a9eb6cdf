#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

// One arm of a star-shaped graph: the linear string whose self-intersections
// are the Hirzebruch-Jung expansion of n/q.
struct Arm {
    Int n;   // n >= 2
    Int q;   // 0 < q < n, gcd(n, q) = 1

    friend bool operator==(const Arm& a, const Arm& b) { return a.n == b.n && a.q == b.q; }
};

// Star-shaped resolution dual graph: a central curve of genus g and
// self-intersection -d with t arms attached. This is the complete
// topological input for every computation in the library.
struct StarGraph {
    long genus = 0;           // g >= 0
    Int d = 0;                // central self-intersection is -d
    std::vector<Arm> arms;

    long t() const { return static_cast<long>(arms.size()); }

    friend bool operator==(const StarGraph& a, const StarGraph& b) {
        return a.genus == b.genus && a.d == b.d && a.arms == b.arms;
    }
};

enum class Severity { warning, error };

struct ValidationIssue {
    Severity severity;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::optional<Rational> e;          // set whenever the arms are well-formed
    bool cyclic_quotient_range = false; // g = 0 with t <= 2

    bool has_error() const {
        for (const auto& i : issues)
            if (i.severity == Severity::error) return true;
        return false;
    }
    bool ok() const { return !has_error(); }
    std::string first_error() const {
        for (const auto& i : issues)
            if (i.severity == Severity::error) return i.message;
        return {};
    }
};

// Structural checks: arm constraints (error), e <= 0 (error, not a
// singularity graph), and the cyclic-quotient range g = 0, t <= 2 (warning;
// such graphs are representable and lattice operations work on them, but the
// star formulas refuse them).
ValidationReport validate_star(const StarGraph& sg);

bool is_cyclic_quotient_range(const StarGraph& sg);

// Throws validation_error unless genus and every arm satisfy the structural
// constraints; says nothing about the sign of e.
void require_arms(const StarGraph& sg);

// Throws validation_error if the graph has a structural error.
void require_valid(const StarGraph& sg);

// require_valid plus rejection of the cyclic-quotient range; used by every
// operation built on the star formulas.
void require_star_domain(const StarGraph& sg);

// Text format: star g=<int> d=<int> arms=<n1>/<q1>,<n2>/<q2>,...
// (arms may be empty: "arms="). JSON: {"genus": g, "d": d, "arms": [[n,q],...]}.
// parse_star auto-detects JSON by a leading '{'. Arm order is preserved
// bit-exactly in both directions.
StarGraph parse_star(const std::string& text);
std::string emit_text(const StarGraph& sg);
std::string emit_json(const StarGraph& sg);

} // namespace seifert
