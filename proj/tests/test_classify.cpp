#include <doctest.h>

#include <string>

#include "seifert/classify.hpp"
#include "seifert/errors.hpp"

using namespace seifert;

TEST_SUITE("classify") {

TEST_CASE("the three classes by the sign of chi") {
    const Classification quot = classify(parse_star("star g=0 d=2 arms=2/1,3/2,5/4"));
    CHECK(quot.cls == SingularityClass::log_terminal_quotient);
    CHECK(quot.chi.sign() < 0);
    CHECK(quot.alpha > Rational(-1));
    CHECK(std::string(to_string(quot.cls)) == "log_terminal_quotient");

    const Classification strict = classify(parse_star("star g=0 d=2 arms=3/1,3/1,3/1"));
    CHECK(strict.cls == SingularityClass::log_canonical_strict);
    CHECK(strict.chi == Rational(0));
    CHECK(strict.alpha == Rational(-1));

    const Classification bad = classify(parse_star("star g=0 d=5 arms=2/1,2/1,2/1,2/1,2/1"));
    CHECK(bad.cls == SingularityClass::not_log_canonical);
    CHECK(bad.chi.sign() > 0);
    CHECK(bad.alpha < Rational(-1));

    const Classification torus = classify(parse_star("star g=1 d=3 arms="));
    CHECK(torus.cls == SingularityClass::log_canonical_strict);
}

TEST_CASE("chi/e < 1 test") {
    CHECK(chi_e_less_than_one(parse_star("star g=0 d=2 arms=2/1,3/2,5/4")));
    // chi/e = 1 exactly at the boundary example.
    CHECK_FALSE(chi_e_less_than_one(parse_star("star g=0 d=1 arms=2/1,3/1,7/1")));
}

TEST_CASE("case patterns") {
    auto tag = [](const char* text) { return qhd_case_pattern(parse_star(text)); };

    CHECK(tag("star g=0 d=4 arms=2/1,3/2,5/4") == QhdCaseTag::t3_d_ge_4);
    CHECK(tag("star g=0 d=7 arms=9/5,11/3,13/6") == QhdCaseTag::t3_d_ge_4);
    CHECK(tag("star g=0 d=3 arms=5/1,7/3,4/3") == QhdCaseTag::t3_d3_q1);
    CHECK(tag("star g=0 d=2 arms=5/1,7/1,9/5") == QhdCaseTag::t3_d2_q1q1);
    CHECK(tag("star g=0 d=3 arms=2/1,3/1,5/1,7/4") == QhdCaseTag::t4_d_ge_3_three_q1);
    CHECK(tag("star g=0 d=5 arms=2/1,3/1,5/1,7/2") == QhdCaseTag::t4_d_ge_3_three_q1);

    // Near misses.
    CHECK_FALSE(tag("star g=0 d=2 arms=2/1,3/2,5/4").has_value());   // E8: one q = 1
    CHECK_FALSE(tag("star g=0 d=3 arms=5/2,7/3,4/3").has_value());   // d = 3, no q = 1
    CHECK_FALSE(tag("star g=0 d=2 arms=5/1,7/3,9/5").has_value());   // d = 2, one q = 1
    CHECK_FALSE(tag("star g=0 d=2 arms=2/1,3/1,5/1,7/2").has_value()); // t = 4 needs d >= 3
    CHECK_FALSE(tag("star g=0 d=4 arms=2/1,3/1,5/2,7/2,9/2").has_value()); // t = 5
    CHECK(std::string(to_string(QhdCaseTag::t3_d_ge_4)) == "t3_d_ge_4");
}

TEST_CASE("case report carries chi/e and demands genus 0") {
    const QhdCaseReport r = qhd_cases(parse_star("star g=0 d=4 arms=2/1,3/2,5/4"));
    CHECK(r.applies);
    CHECK(r.matched_case == QhdCaseTag::t3_d_ge_4);
    CHECK(r.chi_over_e < Rational(1));

    const QhdCaseReport none = qhd_cases(parse_star("star g=0 d=2 arms=2/1,3/2,5/4"));
    CHECK_FALSE(none.applies);
    CHECK_FALSE(none.matched_case.has_value());

    CHECK_THROWS_AS(qhd_cases(parse_star("star g=1 d=3 arms=2/1,3/1,5/1")),
                    validation_error);
}

TEST_CASE("certificate chain") {
    const QhdCertificate good = qhd_certificate(parse_star("star g=0 d=4 arms=2/1,3/2,5/4"));
    CHECK(good.overall);
    REQUIRE(good.steps.size() == 4);
    for (const CertificateStep& s : good.steps)
        CHECK(s.holds);

    // Boundary: chi/e = 1, alpha = -2, no conclusion.
    const QhdCertificate edge = qhd_certificate(parse_star("star g=0 d=1 arms=2/1,3/1,7/1"));
    CHECK_FALSE(edge.overall);
    CHECK_FALSE(edge.steps.back().holds);

    // Pattern fails but the analytic inequalities hold: still no conclusion.
    const QhdCertificate e8 = qhd_certificate(parse_star("star g=0 d=2 arms=2/1,3/2,5/4"));
    CHECK_FALSE(e8.overall);
    CHECK_FALSE(e8.steps.front().holds);
    CHECK(e8.steps[1].holds);
    CHECK(e8.steps[2].holds);
}

TEST_CASE("classify refuses bad domains") {
    CHECK_THROWS_AS(classify(parse_star("star g=0 d=3 arms=5/2")), validation_error);
    CHECK_THROWS_AS(classify(parse_star("star g=0 d=1 arms=3/1,3/1,3/1")), validation_error);
}

}
