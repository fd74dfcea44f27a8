#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abvar/fixtures.hpp"
#include "abvar/local_systems.hpp"

using namespace abvar;

namespace {
Motive L(int k, Int c = 1) { return Motive::lefschetz_power(k, std::move(c)); }
Motive S1(int k, Int c = 1) { return Motive::symbol(MotiveSymbol::elliptic(k), 0, std::move(c)); }
}  // namespace

TEST_CASE("genus 1 Euler characteristics") {
    CHECK(ec_a1(0) == L(1));
    CHECK(ec_a1(10) == S1(12, -1) - L(0));
    CHECK(ec_a1(3).is_zero());
    for (int lam : {2, 4, 6, 8}) CHECK(ec_a1(lam) == L(0, -1));
    CHECK_THROWS_AS(ec_a1(-2), ValidationError);
}

TEST_CASE("genus 2 rest term") {
    CHECK(ec_extr_a2(7, 7) == L(9) - L(0));
    CHECK(ec_extr_a2(2, 0) == L(1, -1));
    CHECK(ec_extr_a2(1, 0).is_zero());
    CHECK(ec_extr_a2(0, 0) == L(1, -1) - L(0));
    CHECK(ec_extr_a2(2, 2).is_zero());
    CHECK(ec_extr_a2(6, 2) == L(3, -1) + L(0));
    CHECK_THROWS_AS(ec_extr_a2(1, 2), ValidationError);
}

TEST_CASE("genus 2 Euler characteristics") {
    CHECK(ec_a2(0, 0) == L(3) + L(2));
    CHECK(ec_a2(1, 1) == L(0, -1));
    CHECK(ec_a2(7, 7) == S1(18, -1) - L(8) - L(0));
    CHECK(ec_a2(4, 4) == L(6));
    CHECK(ec_a2(3, 0).is_zero());  // odd |lambda|
}

TEST_CASE("genus 3 Euler characteristics") {
    CHECK(ec_a3(0, 0, 0) == L(6) + L(5) + L(4) + L(3) + L(0));
    CHECK(ec_a3(1, 1, 0) == L(1, -1));
    CHECK(ec_a3(6, 6, 0) == S1(18) + L(10) + L(9) + L(8));
    CHECK(ec_a3(2, 1, 1) == L(0));
    CHECK(ec_a3(1, 0, 0).is_zero());
}

TEST_CASE("parity vanishing up to |lambda| = 20") {
    for (int l = 1; l <= 20; l += 2) CHECK(ec_a1(l).is_zero());
    for (int l1 = 0; l1 <= 10; ++l1)
        for (int l2 = 0; l2 <= l1; ++l2)
            if ((l1 + l2) % 2) {
                CHECK(ec_a2(l1, l2).is_zero());
                CHECK(ec_extr_a2(l1, l2).is_zero());
            }
    for (int l1 = 0; l1 <= 6; ++l1)
        for (int l2 = 0; l2 <= l1; ++l2)
            for (int l3 = 0; l3 <= l2; ++l3)
                if ((l1 + l2 + l3) % 2) CHECK(ec_a3(l1, l2, l3).is_zero());
}

TEST_CASE("per-degree genus 1 cohomology") {
    auto h0 = h_degrees_a1(0);
    CHECK(h0.size() == 1);
    CHECK(h0.at(0) == Motive::unit());
    auto h2 = h_degrees_a1(2);
    CHECK(h2.size() == 1);
    CHECK(h2.at(1) == L(3));
    auto h10 = h_degrees_a1(10);
    CHECK(h10.at(1) == S1(12) + L(11));
    CHECK(h_degrees_a1(7).empty());
}

TEST_CASE("every fixture motive has integral traces at small q") {
    // after normalization only elliptic symbols of dimension <= 1 remain
    for (int g = 2; g <= 3; ++g)
        for (const auto& e : load_local_system_fixtures(g).entries)
            for (Int q : {Int(2), Int(3), Int(5)}) {
                Rat t = trace(normalize(e.motive), q);
                CHECK(denominator(t) == 1);
            }
}

TEST_CASE("h_degrees_a1 is dual to ec_a1") {
    // for even lambda > 0, dual of H^1 at d = lambda + 1 recovers -e_c
    for (int lam = 2; lam <= 20; lam += 2) {
        auto h = h_degrees_a1(lam);
        CHECK(dual(h.at(1), lam + 1) == ec_a1(lam) * Int(-1));
    }
}
