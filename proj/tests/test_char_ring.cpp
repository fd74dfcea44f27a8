#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abvar/char_ring.hpp"

using namespace abvar;

namespace {

HighestWeight hw(int g, int a, int b = 0, int c = 0) { return HighestWeight(g, {a, b, c}); }

WeightVector wv(int g, int a, int b = 0, int c = 0) { return WeightVector(g, {a, b, c}); }

// independent dimension oracle: sum the Freudenthal weight multiplicities
Int dim_by_weight_count(const HighestWeight& lam) {
    Int total = 0;
    for (const auto& [w, m] : weight_multiplicities(lam)) total += m;
    return total;
}

// independent sl2 Clebsch-Gordan oracle for g = 1
VirtualCharacter cg_tensor_g1(int a, int b) {
    VirtualCharacter out(1);
    for (int l = a + b; l >= std::abs(a - b); l -= 2) out.add(hw(1, l), 1);
    return out;
}

VirtualCharacter random_effective_character(std::mt19937& rng, int g, int max_part,
                                            int max_terms) {
    std::uniform_int_distribution<int> part(0, max_part);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(1, 3);
    VirtualCharacter v(g);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::array<int, kMaxRank> p{};
        for (int i = 0; i < g; ++i) p[i] = part(rng);
        std::sort(p.begin(), p.begin() + g, std::greater<>());
        v.add(HighestWeight(g, p), coeff(rng));
    }
    return v;
}

}  // namespace

TEST_CASE("weyl_dim on small weights") {
    CHECK(weyl_dim(hw(1, 3)) == 4);  // Sym^3 of the standard 2-dim rep
    CHECK(weyl_dim(hw(2, 1, 1)) == 5);
    CHECK(weyl_dim(hw(3, 1, 1, 1)) == 14);
    CHECK(weyl_dim(hw(1, 0)) == 1);
    CHECK(weyl_dim(hw(2, 0, 0)) == 1);
    CHECK(weyl_dim(hw(1, 1)) == 2);
    CHECK(weyl_dim(hw(2, 1, 0)) == 4);
    CHECK(weyl_dim(hw(3, 1, 0, 0)) == 6);
}

TEST_CASE("weyl_dim agrees with the summed weight system") {
    for (int g = 1; g <= 3; ++g) {
        std::vector<HighestWeight> probes;
        if (g == 1)
            probes = {hw(1, 0), hw(1, 1), hw(1, 5), hw(1, 10)};
        else if (g == 2)
            probes = {hw(2, 1, 1), hw(2, 2, 0), hw(2, 4, 2), hw(2, 7, 7), hw(2, 5, 3)};
        else
            probes = {hw(3, 1, 1, 1), hw(3, 2, 1, 1), hw(3, 4, 2, 0), hw(3, 6, 6, 6)};
        for (const auto& lam : probes) CHECK(weyl_dim(lam) == dim_by_weight_count(lam));
    }
}

TEST_CASE("weyl_dim rejects malformed weights") {
    CHECK_THROWS_AS(weyl_dim(hw(2, 1, 2)), ValidationError);
    CHECK_THROWS_AS(weyl_dim(hw(1, -2)), ValidationError);
}

TEST_CASE("weight multiplicities: known small systems") {
    // Sym^2 of the standard rep of SL2
    const auto& w2 = weight_multiplicities(hw(1, 2));
    CHECK(w2.size() == 3);
    CHECK(w2.at(wv(1, 2)) == 1);
    CHECK(w2.at(wv(1, 0)) == 1);
    CHECK(w2.at(wv(1, -2)) == 1);

    CHECK(weight_multiplicities(hw(2, 1, 1)).at(wv(2, 0, 0)) == 1);
    CHECK(weight_multiplicities(hw(2, 2, 0)).at(wv(2, 0, 0)) == 2);
}

TEST_CASE("weight system is invariant under signed permutations") {
    for (const auto& lam : {hw(2, 3, 1), hw(3, 2, 2, 0)}) {
        const auto& w = weight_multiplicities(lam);
        for (const auto& [v, m] : w) {
            for (const auto& u : weyl_orbit(v.dominant_rep())) CHECK(w.at(u) == m);
        }
    }
}

TEST_CASE("tensor: sl2 Clebsch-Gordan") {
    auto got = tensor(VirtualCharacter::irreducible(hw(1, 2)),
                      VirtualCharacter::irreducible(hw(1, 3)));
    VirtualCharacter want(1);
    want.add(hw(1, 5), 1);
    want.add(hw(1, 3), 1);
    want.add(hw(1, 1), 1);
    CHECK(got == want);
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            CHECK(tensor(VirtualCharacter::irreducible(hw(1, a)),
                         VirtualCharacter::irreducible(hw(1, b))) == cg_tensor_g1(a, b));
}

TEST_CASE("tensor: unit of the ring") {
    for (int g = 1; g <= 3; ++g) {
        auto v = VirtualCharacter::irreducible(hw(g, 2, g > 1 ? 1 : 0, g > 2 ? 1 : 0));
        CHECK(tensor(v, VirtualCharacter::one(g)) == v);
    }
}

TEST_CASE("tensor: Sp4 standard squared") {
    auto std2 = VirtualCharacter::irreducible(hw(2, 1, 0));
    auto got = tensor(std2, std2);
    VirtualCharacter want(2);
    want.add(hw(2, 2, 0), 1);
    want.add(hw(2, 1, 1), 1);
    want.add(hw(2, 0, 0), 1);
    CHECK(got == want);
    CHECK(got.dim() == 16);
    CHECK(weyl_dim(hw(2, 2, 0)) + weyl_dim(hw(2, 1, 1)) + 1 == 16);
}

TEST_CASE("tensor rejects rank mismatch") {
    CHECK_THROWS_AS(tensor(VirtualCharacter::one(1), VirtualCharacter::one(2)),
                    ValidationError);
}

TEST_CASE("exterior powers of the standard representation") {
    CHECK(exterior_standard(1, 2) == VirtualCharacter::one(1));
    {
        auto got = exterior_standard(2, 2);
        VirtualCharacter want(2);
        want.add(hw(2, 1, 1), 1);
        want.add(hw(2, 0, 0), 1);
        CHECK(got == want);
        CHECK(got.dim() == 6);
    }
    {
        auto got = exterior_standard(3, 3);
        VirtualCharacter want(3);
        want.add(hw(3, 1, 1, 1), 1);
        want.add(hw(3, 1, 0, 0), 1);
        CHECK(got == want);
        CHECK(got.dim() == 20);
    }
    CHECK_THROWS_AS(exterior_standard(2, 5), ValidationError);
    CHECK_THROWS_AS(exterior_standard(2, -1), ValidationError);
}

TEST_CASE("exterior powers: palindrome and dimension identities") {
    for (int g = 1; g <= 3; ++g) {
        Int alt = 0, tot = 0;
        for (int j = 0; j <= 2 * g; ++j) {
            auto e = exterior_standard(g, j);
            CHECK(e == exterior_standard(g, 2 * g - j));
            Int d = e.dim();
            CHECK(d == binomial(2 * g, j));
            alt += (j % 2 ? -d : d);
            tot += d;
        }
        CHECK(alt == 0);
        CHECK(tot == int_pow(2, 2 * g));
    }
}

TEST_CASE("decompose_weights round trips") {
    CHECK(decompose_weights(1, weights_of(VirtualCharacter::one(1))) ==
          VirtualCharacter::one(1));
    // convolution square of the standard sl2 weights
    auto v1 = weight_multiplicities(hw(1, 1));
    auto got = decompose_weights(1, convolve(v1, v1));
    VirtualCharacter want(1);
    want.add(hw(1, 2), 1);
    want.add(hw(1, 0), 1);
    CHECK(got == want);

    WeightMap l2;
    for (int mask = 0; mask < 16; ++mask) {
        if (std::popcount(unsigned(mask)) != 2) continue;
        WeightVector w(2, {});
        for (int t = 0; t < 4; ++t)
            if (mask & (1 << t)) w.coords[t / 2] += (t % 2 ? -1 : 1);
        l2[w] += 1;
    }
    auto dec = decompose_weights(2, l2);
    CHECK(dec == exterior_standard(2, 2));
}

TEST_CASE("decompose_weights flags asymmetric input") {
    WeightMap bad;
    bad[wv(2, 1, 0)] = 1;
    CHECK_THROWS_WITH_AS(decompose_weights(2, bad),
                         doctest::Contains("not Weyl-symmetric"), ValidationError);
}

TEST_CASE("property: dimension homomorphism and weight convolution") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 40; ++iter) {
        int g = 1 + iter % 3;
        auto a = random_effective_character(rng, g, 3, 3);
        auto b = random_effective_character(rng, g, 3, 3);
        auto p = tensor(a, b);
        CHECK(p.dim() == a.dim() * b.dim());
        CHECK(weights_of(p) == convolve(weights_of(a), weights_of(b)));
        CHECK(decompose_weights(g, weights_of(a)) == a);
        // effective times effective stays effective
        for (const auto& [w, c] : p.coeffs) CHECK(c > 0);
    }
}

TEST_CASE("property: exact evaluation turns tensor into multiplication") {
    const std::array<Int, 3> pts = {2, 3, 5};
    std::mt19937 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        int g = 1 + iter % 3;
        std::span<const Int> point(pts.data(), size_t(g));
        auto a = random_effective_character(rng, g, 3, 2);
        auto b = random_effective_character(rng, g, 3, 2);
        CHECK(evaluate(tensor(a, b), point) == evaluate(a, point) * evaluate(b, point));
    }
}
