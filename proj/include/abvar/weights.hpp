#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "abvar/errors.hpp"
#include "abvar/numeric.hpp"

namespace abvar {

inline constexpr int kMaxRank = 3;

/// Dominant weight (lambda_1 >= ... >= lambda_g >= 0) of Sp(2g), g <= 3.
struct HighestWeight {
    int g = 1;
    std::array<int, kMaxRank> parts{};  // entries past g stay zero

    HighestWeight() = default;
    HighestWeight(int rank, std::array<int, kMaxRank> p) : g(rank), parts(p) {}

    static HighestWeight zero(int rank) { return HighestWeight(rank, {0, 0, 0}); }

    int size() const { return parts[0] + parts[1] + parts[2]; }
    int parity() const { return size() & 1; }

    bool valid() const;
    void validate() const;  // throws ValidationError

    auto operator<=>(const HighestWeight&) const = default;

    std::string str() const;
};

/// Integer weight in the epsilon-coordinates of the maximal torus of Sp(2g).
struct WeightVector {
    int g = 1;
    std::array<int, kMaxRank> coords{};

    WeightVector() = default;
    WeightVector(int rank, std::array<int, kMaxRank> c) : g(rank), coords(c) {}

    auto operator<=>(const WeightVector&) const = default;

    WeightVector operator+(const WeightVector& o) const {
        WeightVector r = *this;
        for (int i = 0; i < kMaxRank; ++i) r.coords[i] += o.coords[i];
        return r;
    }

    // representative of the hyperoctahedral orbit: |coords| sorted descending
    HighestWeight dominant_rep() const;
    bool is_dominant() const;

    std::string str() const;
};

/// Weight system: finite multiplicity map, zero entries absent.
using WeightMap = std::map<WeightVector, Int>;

/// Positive roots of Sp(2g) in epsilon-coordinates.
const std::vector<WeightVector>& positive_roots(int g);

/// Weyl vector rho = (g, g-1, ..., 1).
WeightVector weyl_rho(int g);

/// Dominant weights mu with mu <= lambda in the dominance order (candidates
/// for nonzero multiplicity in V_lambda).
std::vector<HighestWeight> dominant_weights_below(const HighestWeight& lambda);

/// Multiplicities of the dominant weights of the irreducible V_lambda,
/// computed by Freudenthal's recursion. Memoized; the returned map is stable.
const std::map<HighestWeight, Int>& dominant_multiplicities(const HighestWeight& lambda);

/// Full weight system of V_lambda (dominant multiplicities spread over
/// hyperoctahedral orbits). Memoized.
const WeightMap& weight_multiplicities(const HighestWeight& lambda);

/// Orbit of a dominant weight under coordinate permutations and sign flips.
std::vector<WeightVector> weyl_orbit(const HighestWeight& mu);

/// dim V_lambda by the Weyl dimension formula (exact).
Int weyl_dim(const HighestWeight& lambda);

}  // namespace abvar
