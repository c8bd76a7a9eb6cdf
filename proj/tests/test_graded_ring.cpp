#include <doctest.h>

#include "oracles.hpp"
#include "seifert/errors.hpp"
#include "seifert/graded_ring.hpp"

using namespace seifert;

namespace {

DemazureData demazure(const char* text) {
    return DemazureData::from_star(parse_star(text));
}

} // namespace

TEST_SUITE("graded_ring") {

TEST_CASE("E8 graded dimensions match the Brieskorn monomial count") {
    const DemazureData dd = demazure("star g=0 d=2 arms=2/1,3/2,5/4");
    for (long k = 0; k <= 30; ++k)
        CHECK(graded_dim(dd, Int(k)) == oracles::e8_brieskorn_dim(k));
    CHECK(graded_dim(dd, Int(0)) == 1);
    CHECK(graded_dim(dd, Int(-1)) == 0);
    const std::vector<Int> series = poincare_series(dd, 12);
    CHECK(series == std::vector<Int>{1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1});
}

TEST_CASE("degrees of E and Xi agree with the invariants") {
    const DemazureData dd = demazure("star g=0 d=3 arms=4/1,4/1,4/1");
    CHECK(dd.deg_E() == Rational(Int(9), Int(4)));
    CHECK(dd.deg_Xi() == Rational(Int(1), Int(4)));
    CHECK(deg_floor_kE(dd, Int(0)) == 0);
    CHECK(deg_floor_kE(dd, Int(1)) == 0);    // 3 - 3*ceil(1/4) = 0
    CHECK(deg_floor_kE(dd, Int(4)) == 9);
    CHECK(deg_floor_kE(dd, Int(-1)) == -3);  // -3 - 3*ceil(-1/4) = -3
}

TEST_CASE("genus above zero is refused with the scope message") {
    const DemazureData dd = demazure("star g=1 d=3 arms=");
    CHECK_THROWS_WITH_AS(graded_dim(dd, Int(1)),
                         "genus > 0: dimensions need divisor class (out of scope)",
                         validation_error);
    CHECK_THROWS_AS(poincare_series(dd, 5), validation_error);
    CHECK_THROWS_AS(dualizing_dims(dd, 0, 5), validation_error);
    CHECK_THROWS_AS(gorenstein_test(dd), validation_error);
}

TEST_CASE("poincare series rejects negative k_max, dualizing an empty range") {
    const DemazureData dd = demazure("star g=0 d=2 arms=2/1,3/2,5/4");
    CHECK_THROWS_AS(poincare_series(dd, -1), validation_error);
    CHECK_THROWS_AS(dualizing_dims(dd, 3, 2), validation_error);
}

TEST_CASE("gorenstein test on worked examples") {
    const std::optional<Int> t_e8 = gorenstein_test(demazure("star g=0 d=2 arms=2/1,3/2,5/4"));
    REQUIRE(t_e8.has_value());
    CHECK(*t_e8 == -1);

    CHECK_FALSE(gorenstein_test(demazure("star g=0 d=3 arms=4/1,4/1,4/1")).has_value());

    // chi = 0 rings: t = 0 needs q_i = inverse of 0, impossible.
    CHECK_FALSE(gorenstein_test(demazure("star g=0 d=2 arms=3/1,3/1,3/1")).has_value());

    // The (2,3,7) triangle singularity: chi/e = 1 and every q_i = 1.
    const std::optional<Int> t2 = gorenstein_test(demazure("star g=0 d=1 arms=2/1,3/1,7/1"));
    REQUIRE(t2.has_value());
    CHECK(*t2 == 1);
}

TEST_CASE("gorenstein duality shifts the series by t") {
    const DemazureData dd = demazure("star g=0 d=2 arms=2/1,3/2,5/4");
    const std::optional<Int> t = gorenstein_test(dd);
    REQUIRE(t.has_value());
    const std::vector<Int> dual = dualizing_dims(dd, -5, 40);
    for (long k = -5; k <= 40; ++k)
        CHECK(dual[static_cast<size_t>(k + 5)] == graded_dim(dd, Int(k) + *t));
}

TEST_CASE("q-gorenstein order") {
    const QGorensteinOrder e8 = q_gorenstein_order(demazure("star g=0 d=2 arms=2/1,3/2,5/4"));
    CHECK(e8.s == 1);
    CHECK(e8.t == -1);
    CHECK(e8.torsion_decided);

    const QGorensteinOrder o9 = q_gorenstein_order(demazure("star g=0 d=3 arms=4/1,4/1,4/1"));
    CHECK(o9.s == 9);
    CHECK(o9.t == 1);

    const QGorensteinOrder o3 = q_gorenstein_order(demazure("star g=0 d=2 arms=3/1,3/1,3/1"));
    CHECK(o3.s == 3);
    CHECK(o3.t == 0);

    const QGorensteinOrder g1 = q_gorenstein_order(demazure("star g=1 d=3 arms="));
    CHECK(g1.s == 1);
    CHECK(g1.t == 0);
    CHECK_FALSE(g1.torsion_decided);
}

TEST_CASE("order search requires a singularity degree") {
    CHECK_THROWS_AS(q_gorenstein_order(demazure("star g=0 d=1 arms=3/1,3/1,3/1")),
                    validation_error);
}

}
