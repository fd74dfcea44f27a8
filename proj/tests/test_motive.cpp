#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abvar/motive.hpp"

using namespace abvar;

namespace {

Motive L(int k, Int c = 1) { return Motive::lefschetz_power(k, std::move(c)); }
Motive S1(int k, int l = 0, Int c = 1) {
    return Motive::symbol(MotiveSymbol::elliptic(k), l, std::move(c));
}

Motive random_tate(std::mt19937& rng) {
    std::uniform_int_distribution<int> expo(0, 6), coeff(-4, 4), n(1, 4);
    Motive m;
    for (int i = 0, k = n(rng); i < k; ++i) m += L(expo(rng), coeff(rng));
    return m;
}

Motive random_motive(std::mt19937& rng) {
    Motive m = random_tate(rng);
    std::uniform_int_distribution<int> pick(0, 3), l(0, 4);
    switch (pick(rng)) {
        case 0: m += S1(12, l(rng)); break;
        case 1: m += Motive::symbol(MotiveSymbol::siegel2(0, 10), l(rng), -2); break;
        case 2: m += Motive::symbol(MotiveSymbol::siegel3(3, 3, 7), l(rng)); break;
        default: break;
    }
    return m;
}

}  // namespace

TEST_CASE("ring arithmetic") {
    CHECK((L(1) + L(0)) * L(1) == L(2) + L(1));
    CHECK((S1(12, 0, -1) - L(0)) + L(0) == S1(12, 0, -1));
    CHECK((L(9) - L(0)) * (L(1) + L(0)) == L(10) + L(9) - L(1) - L(0));
}

TEST_CASE("symbol products are rejected") {
    CHECK_THROWS_WITH_AS(S1(12) * S1(18), doctest::Contains("S1[12]"),
                         UnsupportedProductError);
    // scalar and Tate multiples are fine
    CHECK((S1(12) * (L(2) + L(0))).coeff(MotiveSymbol::elliptic(12), 2) == 1);
}

TEST_CASE("normalize: conventions and vanishing") {
    CHECK(normalize(S1(2, 0, -1) - L(0)) == L(1));
    CHECK(normalize(Motive::symbol(MotiveSymbol::siegel2(0, 10))) ==
          S1(18) + L(9) + L(8));
    CHECK(normalize(S1(10)).is_zero());
    CHECK(normalize(S1(7)).is_zero());
    CHECK(normalize(Motive::symbol(MotiveSymbol::siegel2(0, 3), 0, -1)) ==
          L(3) + L(2) + L(1) + L(0));
    CHECK(normalize(Motive::symbol(MotiveSymbol::siegel3(0, 0, 4))) ==
          L(6) + L(5) + L(4) + L(3, 2) + L(2) + L(1) + L(0));
    // unknown symbols pass through untouched
    auto far = Motive::symbol(MotiveSymbol::siegel2(13, 5));
    CHECK(normalize(far) == far);
}

TEST_CASE("normalize is idempotent") {
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        auto m = random_motive(rng);
        auto n1 = normalize(m);
        CHECK(normalize(n1) == n1);
    }
}

TEST_CASE("is_tate") {
    CHECK(is_tate(L(3) + L(2)) == Ternary::Yes);
    CHECK(is_tate(S1(12, 0, -1) - L(0)) == Ternary::No);
    CHECK(is_tate(Motive::symbol(MotiveSymbol::siegel2(13, 5))) == Ternary::Unknown);
    CHECK(is_tate(Motive::zero()) == Ternary::Yes);
}

TEST_CASE("dual") {
    CHECK(dual(L(2), 5) == L(3));
    CHECK(dual(L(0) + L(1, 3) + L(2) - L(3), 3) == L(3) + L(2, 3) + L(1) - L(0));
    CHECK(dual(S1(12), 11) == S1(12));
    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
        auto m = normalize(random_motive(rng));
        for (int d : {0, 3, 17}) CHECK(dual(dual(m, d), d) == m);
    }
}

TEST_CASE("trace evaluation") {
    CHECK(trace(L(2) + L(1), 5) == 30);
    CHECK(trace(S1(12, 0, -1) - L(0), 5) == -4831);
    CHECK(trace(normalize(Motive::symbol(MotiveSymbol::siegel2(0, 10))), 2) == 240);
    // prime powers route through the trace recursion
    CHECK(trace(S1(12), 4) == -3520);
    CHECK(trace(S1(12), 2) == -24);
    CHECK_THROWS_AS(trace(Motive::symbol(MotiveSymbol::siegel2(6, 8)), 2), EvaluationError);
    CHECK_THROWS_AS(trace(S1(24), 2), EvaluationError);
    CHECK_THROWS_AS(trace(L(0), 12), ValidationError);  // 12 is not a prime power
}

TEST_CASE("trace is multiplicative on the Tate subring") {
    std::mt19937 rng(17);
    for (int i = 0; i < 40; ++i) {
        auto a = random_tate(rng), b = random_tate(rng);
        CHECK(trace(a * b, 7) == trace(a, 7) * trace(b, 7));
    }
}

TEST_CASE("symbol text forms") {
    CHECK(MotiveSymbol::elliptic(12).str() == "S1[12]");
    CHECK(MotiveSymbol::parse("S2[0,10]") == MotiveSymbol::siegel2(0, 10));
    CHECK(MotiveSymbol::parse("S3[3,3,7]") == MotiveSymbol::siegel3(3, 3, 7));
    CHECK(MotiveSymbol::parse("1") == MotiveSymbol::unit());
    CHECK_THROWS_AS(MotiveSymbol::parse("S4[1]"), ValidationError);
    CHECK(motive_str(S1(12, 0, -1) - L(0)) == "-S1[12]-1");
    CHECK(motive_str(L(2) + L(1)) == "L^2+L");
    CHECK(motive_str(L(8, 7) + L(0, -3)) == "7L^8-3");
    CHECK(motive_str(S1(18, 5, 21)) == "21*S1[18]*L^5");
    CHECK(motive_str(Motive::zero()) == "0");
}

TEST_CASE("motivic weights") {
    CHECK(MotiveSymbol::unit().motivic_weight() == 0);
    CHECK(MotiveSymbol::elliptic(12).motivic_weight() == 11);
    CHECK(MotiveSymbol::siegel2(0, 10).motivic_weight() == 17);
    CHECK(MotiveSymbol::siegel3(0, 0, 4).motivic_weight() == 6);
}
