#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "abvar/modforms.hpp"

using namespace abvar;

namespace {

// basis-count oracle: S_k = Delta * M_{k-12} and M_m has the monomial basis
// E4^a E6^b with 4a + 6b = m
int cusp_dim_by_monomial_count(int k) {
    if (k < 12 || k % 2 != 0) return 0;
    int m = k - 12;
    int count = 0;
    for (int a = 0; 4 * a <= m; ++a)
        if ((m - 4 * a) % 6 == 0) ++count;
    return count;
}

}  // namespace

TEST_CASE("cusp form dimensions") {
    CHECK(dim_cusp_sl2(12) == 1);
    CHECK(dim_cusp_sl2(2) == -1);
    CHECK(dim_cusp_sl2(16) == 1);
    CHECK(dim_cusp_sl2(0) == 0);
    CHECK(dim_cusp_sl2(-4) == 0);
    CHECK(dim_cusp_sl2(7) == 0);
    for (int k : {4, 6, 8, 10, 14}) CHECK(dim_cusp_sl2(k) == 0);
    for (int k = 4; k <= 60; k += 2) CHECK(dim_cusp_sl2(k) == cusp_dim_by_monomial_count(k));
}

TEST_CASE("discriminant expansion") {
    auto d = qexp(Series::Delta, 4);
    CHECK(d.coeffs == std::vector<Int>{0, 1, -24, 252, -1472});
    CHECK(qexp(Series::Delta, 5).at(5) == 4830);
    CHECK_THROWS_AS(qexp(Series::Delta, 0), ValidationError);
}

TEST_CASE("f18 = Delta * E6") {
    CHECK(qexp(Series::F18, 2).at(2) == -528);
    CHECK(qexp(Series::F18, 1).at(1) == 1);  // normalized
    CHECK(qexp(Series::F18, 2).weight == 18);
}

TEST_CASE("both discriminant constructions agree") {
    CHECK(qexp(Series::Delta, 50) == delta_by_eisenstein(50));
}

TEST_CASE("hecke eigenvalues for one-dimensional spaces") {
    CHECK(hecke_ap(12, 2) == -24);
    CHECK(hecke_ap(12, 3) == 252);
    CHECK(hecke_ap(18, 2) == -528);
    CHECK(hecke_ap(12, 5) == 4830);
    CHECK_THROWS_AS(hecke_ap(14, 2), ValidationError);
    CHECK_THROWS_AS(hecke_ap(24, 2), ValidationError);
}

TEST_CASE("frobenius trace powers") {
    CHECK(frob_trace_power(-24, 12, 2, 1) == -24);
    CHECK(frob_trace_power(-24, 12, 2, 0) == 2);
    CHECK(frob_trace_power(-24, 12, 2, 2) == -3520);
    // a_4 = a_2^2 - 2^11 and t_2 = a_4 - 2^11
    CHECK(frob_trace_power(-24, 12, 2, 2) == qexp(Series::Delta, 4).at(4) - int_pow(2, 11));
}

TEST_CASE("property: hecke multiplicativity on Delta and F18") {
    for (Series s : {Series::Delta, Series::F18}) {
        auto f = qexp(s, 900);
        for (int m = 1; m <= 30; ++m)
            for (int n = 1; n <= 30; ++n)
                if (std::gcd(m, n) == 1) CHECK(f.at(m * n) == f.at(m) * f.at(n));
    }
}

TEST_CASE("property: a_{p^2} identity") {
    for (auto [s, k] : {std::pair{Series::Delta, 12}, std::pair{Series::F18, 18}}) {
        auto f = qexp(s, 25);
        for (int p : {2, 3, 5})
            CHECK(f.at(p * p) == f.at(p) * f.at(p) - int_pow(p, unsigned(k - 1)));
    }
}
