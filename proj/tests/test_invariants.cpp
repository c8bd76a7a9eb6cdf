#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "seifert/errors.hpp"
#include "seifert/invariants.hpp"

using namespace seifert;

TEST_SUITE("invariants") {

TEST_CASE("E8 invariants") {
    const StarGraph sg = parse_star("star g=0 d=2 arms=2/1,3/2,5/4");
    CHECK(euler_e(sg) == Rational(Int(1), Int(30)));
    CHECK(chi(sg) == Rational(Int(-1), Int(30)));
    const SeifertInvariants inv = seifert_invariants(sg);
    CHECK(inv.beta == Rational(-1));
    CHECK(inv.alpha == Rational(0));
    CHECK(k_order_numerical(sg) == 1);
}

TEST_CASE("torus-base examples") {
    const StarGraph sg = parse_star("star g=1 d=3 arms=");
    CHECK(euler_e(sg) == Rational(3));
    CHECK(chi(sg) == Rational(0));
    const GradedDiscrepancy gd = graded_discrepancy(sg);
    CHECK(gd.alpha == Rational(-1));
    CHECK(gd.assumes_q_gorenstein);
    CHECK_FALSE(graded_discrepancy(parse_star("star g=0 d=2 arms=2/1,3/2,5/4"))
                    .assumes_q_gorenstein);
}

TEST_CASE("closed form canonical cycle on a worked example") {
    const StarGraph sg = parse_star("star g=0 d=3 arms=4/1,4/1,4/1");
    const CanonicalCycle k = canonical_cycle_closed_form(sg);
    REQUIRE(k.k.size() == 4);
    CHECK(k.labels[0].str() == "C");
    CHECK(k.k[0] == Rational(Int(-10), Int(9)));
    for (size_t i = 1; i < 4; ++i)
        CHECK(k.k[i] == Rational(Int(-7), Int(9)));
    CHECK(k.denominator_lcm() == 9);
    CHECK(k_order_numerical(sg) == 9);
}

TEST_CASE("closed form matches the oracle on a seeded corpus") {
    for (const StarGraph& sg : oracles::star_corpus(60, 0x5e1f)) {
        const CanonicalCycle closed = canonical_cycle_closed_form(sg);
        const CanonicalCycle oracle = canonical_cycle_oracle(expand(sg));
        REQUIRE(closed.k.size() == oracle.k.size());
        for (size_t i = 0; i < closed.k.size(); ++i)
            CHECK(closed.k[i] == oracle.k[i]);
        const SeifertInvariants inv = seifert_invariants(sg);
        CHECK(-closed.k[0] == Rational(1) + inv.beta);
    }
}

TEST_CASE("numerical order falls back to the oracle for t < 2") {
    // One arm, genus 1: K = (-7/5, -4/5), order 5, yet the subset form over
    // zero arms would give 1. The fallback must report 5.
    const StarGraph sg = parse_star("star g=1 d=2 arms=3/1");
    const CanonicalCycle k = canonical_cycle_oracle(expand(sg));
    CHECK(k.denominator_lcm() == 5);
    CHECK(k_order_numerical(sg) == 5);
}

TEST_CASE("star domain is enforced") {
    const StarGraph cyclic = parse_star("star g=0 d=3 arms=5/2");
    CHECK_THROWS_AS(seifert_invariants(cyclic), validation_error);
    CHECK_THROWS_AS(canonical_cycle_closed_form(cyclic), validation_error);
    CHECK_THROWS_AS(k_order_numerical(cyclic), validation_error);
    CHECK_THROWS_AS(seifert_invariants(parse_star("star g=0 d=1 arms=3/1,3/1,3/1")),
                    validation_error);
}

TEST_CASE("discrepancy shift") {
    for (long m = 1; m <= 20; ++m)
        CHECK(discrepancy_shift(Rational(0), Int(m)) == Rational(Int(m)));
    CHECK(discrepancy_shift(Rational(Int(-3), Int(2)), Int(4)) == Rational(Int(5), Int(2)));
    CHECK_THROWS_AS(discrepancy_shift(Rational(0), Int(0)), validation_error);
    CHECK_THROWS_AS(discrepancy_shift(Rational(0), Int(-1)), validation_error);
}

TEST_CASE("cone discrepancy") {
    CHECK(cone_discrepancy(Int(-3), Int(1)) == Rational(2));    // projective plane
    CHECK(cone_discrepancy(Int(2), Int(1)) == Rational(-3));    // general type
    CHECK(cone_discrepancy(Int(1), Int(2)) == Rational(Int(-3), Int(2)));
    CHECK_THROWS_AS(cone_discrepancy(Int(1), Int(0)), validation_error);
}

TEST_CASE("section condition on weights") {
    const std::vector<Int> w221{2, 2, 1};
    CHECK_FALSE(section_condition_check(w221, SectionCase::coordinate(2)));
    CHECK(section_condition_check(w221, SectionCase::coordinate(0)));
    CHECK(section_condition_check(w221, SectionCase::in_square()));

    const std::vector<Int> w235{2, 3, 5};
    for (size_t j = 0; j < 3; ++j)
        CHECK(section_condition_check(w235, SectionCase::coordinate(j)));

    CHECK_THROWS_AS(section_condition_check({}, SectionCase::in_square()), validation_error);
    CHECK_THROWS_AS(section_condition_check({Int(0), Int(2)}, SectionCase::in_square()),
                    validation_error);
    CHECK_THROWS_AS(section_condition_check({Int(2), Int(4)}, SectionCase::in_square()),
                    validation_error);
    CHECK_THROWS_AS(section_condition_check(w221, SectionCase::coordinate(3)),
                    validation_error);
}

}
