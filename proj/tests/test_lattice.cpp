#include <doctest.h>

#include "seifert/errors.hpp"
#include "seifert/lattice.hpp"

using namespace seifert;

TEST_SUITE("lattice") {

TEST_CASE("E8 has trivial discriminant group and K = 0") {
    const PlumbingGraph pg = expand(parse_star("star g=0 d=2 arms=2/1,3/2,5/4"));
    const DiscriminantGroup g = discriminant_group(pg);
    CHECK(g.trivial());
    CHECK(g.order == 1);
    CHECK(g.str() == "trivial");

    const CanonicalCycle k = canonical_cycle_oracle(pg);
    REQUIRE(k.k.size() == 8);
    for (const Rational& c : k.k)
        CHECK(c == Rational(0));
    CHECK(k.denominator_lcm() == 1);
}

TEST_CASE("rational double points have K = 0 and the right group") {
    // D4: group Z/2 x Z/2 of order 4.
    const PlumbingGraph d4 = expand(parse_star("star g=0 d=2 arms=2/1,2/1,2/1"));
    const DiscriminantGroup g = discriminant_group(d4);
    CHECK_FALSE(g.trivial());
    CHECK(g.order == 4);
    CHECK(g.factors == std::vector<Int>{2, 2});
    CHECK(g.str() == "Z/2 x Z/2");
    for (const Rational& c : canonical_cycle_oracle(d4).k)
        CHECK(c == Rational(0));
}

TEST_CASE("cyclic quotient strings have cyclic group Z/n") {
    // The 5/2 string [3,2] as a one-arm star; its cokernel is Z/5.
    const PlumbingGraph pg = expand(parse_star("star g=0 d=3 arms=5/2"));
    // Drop the central vertex by building the string matrix directly.
    IntMatrix m(2);
    m.at(0, 0) = -3;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = -2;
    CHECK(invariant_factors(m) == std::vector<Int>{5});

    // With the central -3 curve attached the whole graph is still a cyclic
    // quotient (g = 0, t = 1), of order |det| = 13.
    const DiscriminantGroup g = discriminant_group(pg);
    CHECK(g.order == 13);
    CHECK(g.str() == "Z/13");
}

TEST_CASE("oracle coefficients satisfy adjunction") {
    const StarGraph sg = parse_star("star g=1 d=4 arms=7/3,5/1");
    const PlumbingGraph pg = expand(sg);
    const IntersectionMatrix im = intersection_matrix(pg);
    const CanonicalCycle k = canonical_cycle_oracle(pg);
    const long n = im.m.size();
    REQUIRE(k.k.size() == static_cast<size_t>(n));
    REQUIRE(k.labels.size() == static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        Rational dot(0);
        for (long j = 0; j < n; ++j)
            dot += Rational(im.m.at(i, j)) * k.k[static_cast<size_t>(j)];
        const Rational rhs = Rational(2 * pg.vertices[static_cast<size_t>(i)].genus - 2) -
                             Rational(im.m.at(i, i));
        CHECK(dot == rhs);
    }
    CHECK(k.labels[0].str() == "C");
}

TEST_CASE("z cycle is minus K minus the reduced cycle") {
    const PlumbingGraph pg = expand(parse_star("star g=0 d=3 arms=4/1,4/1,4/1"));
    const CanonicalCycle k = canonical_cycle_oracle(pg);
    for (size_t i = 0; i < k.k.size(); ++i)
        CHECK(k.z(i) == -k.k[i] - Rational(1));
}

TEST_CASE("indefinite input is rejected") {
    const PlumbingGraph flat = expand(parse_star("star g=0 d=1 arms=3/1,3/1,3/1"));
    CHECK_THROWS_AS(discriminant_group(flat), validation_error);
    CHECK_THROWS_AS(canonical_cycle_oracle(flat), validation_error);
}

}
