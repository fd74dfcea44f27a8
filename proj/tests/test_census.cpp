#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abvar/census.hpp"
#include "abvar/modforms.hpp"

using namespace abvar;

TEST_CASE("weighted class counts equal p") {
    for (long p : {5L, 7L, 11L, 13L}) {
        auto r = census_moments(p, 0);
        CHECK(r.weighted_class_count == Rat(p));
        CHECK(r.moments[0] == Rat(1));
    }
}

TEST_CASE("first moments over F_5") {
    auto r = census_moments(5, 2);
    CHECK(r.moments[1] == Rat(6));
    CHECK(r.moments[2] == Rat(204, 5));
}

TEST_CASE("rejected characteristics") {
    CHECK_THROWS_AS(census_moments(3, 1), ValidationError);
    CHECK_THROWS_AS(census_moments(2, 1), ValidationError);
    CHECK_THROWS_AS(census_moments(9, 1), ValidationError);
    CHECK_THROWS_AS(census_moments(-5, 1), ValidationError);
}

TEST_CASE("census equals the cohomological formula for p = 7, n <= 9") {
    for (const auto& c : census_vs_formula(7, 9)) CHECK(c.match);
}

TEST_CASE("n = 10 exercises the cusp form trace") {
    CHECK(hecke_ap(12, 5) == 4830);  // computed from the product expansion
    auto rows = census_vs_formula(5, 10);
    CHECK(rows[10].match);
    CHECK(rows[10].census == rows[10].formula);
}

TEST_CASE("trivial comparison at n = 0") {
    auto rows = census_vs_formula(13, 0);
    CHECK(rows[0].census == Rat(1));
    CHECK(rows[0].formula == Rat(1));
    CHECK(rows[0].match);
}
