#include "seifert/classify.hpp"

namespace seifert {

const char* to_string(SingularityClass c) {
    switch (c) {
        case SingularityClass::log_terminal_quotient: return "log_terminal_quotient";
        case SingularityClass::log_canonical_strict: return "log_canonical_strict";
        case SingularityClass::not_log_canonical: return "not_log_canonical";
    }
    return "?";
}

const char* to_string(QhdCaseTag c) {
    switch (c) {
        case QhdCaseTag::t3_d_ge_4: return "t3_d_ge_4";
        case QhdCaseTag::t3_d3_q1: return "t3_d3_q1";
        case QhdCaseTag::t3_d2_q1q1: return "t3_d2_q1q1";
        case QhdCaseTag::t4_d_ge_3_three_q1: return "t4_d_ge_3_three_q1";
    }
    return "?";
}

Classification classify(const StarGraph& sg) {
    SeifertInvariants inv = seifert_invariants(sg);

    Classification out;
    out.chi = inv.chi;
    out.alpha = inv.alpha;
    if (inv.chi < 0)
        out.cls = SingularityClass::log_terminal_quotient;
    else if (inv.chi.sign() == 0)
        out.cls = SingularityClass::log_canonical_strict;
    else
        out.cls = SingularityClass::not_log_canonical;

    // Guard: the chi-sign dictionary must agree with the alpha thresholds
    // (alpha = -1 - chi/e with e > 0, so this is pure algebra).
    bool agrees = (out.cls == SingularityClass::log_terminal_quotient && inv.alpha > Rational(-1)) ||
                  (out.cls == SingularityClass::log_canonical_strict && inv.alpha == Rational(-1)) ||
                  (out.cls == SingularityClass::not_log_canonical && inv.alpha < Rational(-1));
    if (!agrees)
        throw consistency_error("classify: chi sign and alpha threshold disagree (chi = " +
                                inv.chi.str() + ", alpha = " + inv.alpha.str() + ")");
    return out;
}

bool chi_e_less_than_one(const StarGraph& sg) {
    require_valid(sg);   // validity includes e > 0
    return chi(sg) / euler_e(sg) < Rational(1);
}

std::optional<QhdCaseTag> qhd_case_pattern(const StarGraph& sg) {
    long unit_arms = 0;
    for (const Arm& a : sg.arms)
        if (a.q == 1) ++unit_arms;

    if (sg.t() == 3) {
        if (sg.d >= 4) return QhdCaseTag::t3_d_ge_4;
        if (sg.d == 3 && unit_arms >= 1) return QhdCaseTag::t3_d3_q1;
        if (sg.d == 2 && unit_arms >= 2) return QhdCaseTag::t3_d2_q1q1;
    } else if (sg.t() == 4) {
        if (sg.d >= 3 && unit_arms >= 3) return QhdCaseTag::t4_d_ge_3_three_q1;
    }
    return std::nullopt;
}

QhdCaseReport qhd_cases(const StarGraph& sg) {
    require_valid(sg);
    if (sg.genus != 0)
        throw validation_error("qhd_cases: defined for genus 0 only, got g = " + std::to_string(sg.genus));

    QhdCaseReport rep;
    rep.chi_over_e = chi(sg) / euler_e(sg);
    rep.matched_case = qhd_case_pattern(sg);
    rep.applies = rep.matched_case.has_value();

    if (rep.applies && rep.chi_over_e >= Rational(1))
        throw consistency_error("qhd_cases: case " + std::string(to_string(*rep.matched_case)) +
                                " matched but chi/e = " + rep.chi_over_e.str() + " >= 1");
    return rep;
}

QhdCertificate qhd_certificate(const StarGraph& sg) {
    require_valid(sg);
    if (sg.genus != 0)
        throw validation_error("qhd_certificate: defined for genus 0 only, got g = " +
                               std::to_string(sg.genus));

    QhdCaseReport cases = qhd_cases(sg);
    Rational alpha = Rational(-1) - cases.chi_over_e;

    QhdCertificate cert;
    cert.steps.push_back({"graph matches a rational-homology-disk candidate pattern",
                          cases.applies ? to_string(*cases.matched_case) : "no case matches",
                          cases.applies});
    cert.steps.push_back({"chi/e < 1", cases.chi_over_e.str(),
                          cases.chi_over_e < Rational(1)});
    cert.steps.push_back({"alpha > -2", alpha.str(), alpha > Rational(-2)});

    bool chain = cert.steps[0].holds && cert.steps[1].holds && cert.steps[2].holds;
    cert.steps.push_back({"any negative-weight smoothing total space with K Q-Cartier is "
                          "log terminal, hence the smoothing is Q-Gorenstein",
                          chain ? "holds" : "not established", chain});
    cert.overall = chain;
    return cert;
}

} // namespace seifert
