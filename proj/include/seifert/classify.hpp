#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seifert/invariants.hpp"
#include "seifert/star_graph.hpp"

namespace seifert {

// The sign of chi decides everything here: chi < 0 exactly for quotient
// singularities (log terminal), chi = 0 for the strictly log canonical
// graded singularities, chi > 0 otherwise. With e > 0 this matches the
// discrepancy thresholds alpha > -1 / alpha = -1 / alpha < -1, and the
// agreement is asserted.
enum class SingularityClass { log_terminal_quotient, log_canonical_strict, not_log_canonical };

const char* to_string(SingularityClass c);

struct Classification {
    SingularityClass cls;
    Rational chi;
    Rational alpha;
};

// Requires the star-formula domain (valid, e > 0, not cyclic-quotient range).
Classification classify(const StarGraph& sg);

// Exact test chi/e < 1; any valid graph with e > 0 qualifies.
bool chi_e_less_than_one(const StarGraph& sg);

// The four graph patterns under which chi/e < 1 is guaranteed; they are the
// graph-side restrictions satisfied by rational-homology-disk smoothing
// candidates. q_i = 1 conditions are matched up to arm permutation, and the
// first matching case in the fixed order below is reported.
enum class QhdCaseTag { t3_d_ge_4, t3_d3_q1, t3_d2_q1q1, t4_d_ge_3_three_q1 };

const char* to_string(QhdCaseTag c);

struct QhdCaseReport {
    bool applies = false;
    std::optional<QhdCaseTag> matched_case;
    Rational chi_over_e;
};

// Pure pattern match on (t, d, q_i); no arithmetic beyond comparisons.
std::optional<QhdCaseTag> qhd_case_pattern(const StarGraph& sg);

// Pattern match plus the soundness assertion: whenever a case applies,
// chi/e < 1 must hold exactly (consistency_error otherwise; this is the
// guarantee the patterns exist to provide). Requires g = 0.
QhdCaseReport qhd_cases(const StarGraph& sg);

struct CertificateStep {
    std::string claim;
    std::string value;
    bool holds = false;
};

// The implication chain for rational-homology-disk smoothing candidates:
// pattern match => chi/e < 1 => alpha > -2 => the total space of any
// negative-weight smoothing with K Q-Cartier is log terminal, hence such a
// smoothing is Q-Gorenstein. Each link is evaluated independently. This
// reports necessary conditions only; it never asserts that a smoothing with
// rational-homology-disk fibre actually exists.
struct QhdCertificate {
    std::vector<CertificateStep> steps;
    bool overall = false;
};

// Requires g = 0 and a valid graph.
QhdCertificate qhd_certificate(const StarGraph& sg);

} // namespace seifert
