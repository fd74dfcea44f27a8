#pragma once

#include <map>
#include <span>
#include <string>

#include "abvar/weights.hpp"

namespace abvar {

/// Element of the representation ring of Sp(2g): an integer combination of
/// irreducible highest-weight characters. Canonical form: no zero
/// coefficients, keys ordered lexicographically.
struct VirtualCharacter {
    int g = 1;
    std::map<HighestWeight, Int> coeffs;

    VirtualCharacter() = default;
    explicit VirtualCharacter(int rank) : g(rank) {}

    static VirtualCharacter irreducible(const HighestWeight& lambda, Int c = 1);
    static VirtualCharacter zero(int rank) { return VirtualCharacter(rank); }
    static VirtualCharacter one(int rank) { return irreducible(HighestWeight::zero(rank)); }

    bool is_zero() const { return coeffs.empty(); }
    Int coeff(const HighestWeight& lambda) const;

    /// total dimension (the dimension homomorphism)
    Int dim() const;

    VirtualCharacter& add(const HighestWeight& lambda, const Int& c);
    VirtualCharacter& operator+=(const VirtualCharacter& o);
    VirtualCharacter& operator-=(const VirtualCharacter& o);
    VirtualCharacter& operator*=(const Int& c);

    friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) {
        return a += b;
    }
    friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) {
        return a -= b;
    }
    friend VirtualCharacter operator*(VirtualCharacter a, const Int& c) { return a *= c; }

    bool operator==(const VirtualCharacter&) const = default;

    std::string str() const;
};

/// Weight system of a virtual character (linear extension of the irreducible
/// weight systems).
WeightMap weights_of(const VirtualCharacter& v);

/// Convolution of weight systems (the weight system of a tensor product).
WeightMap convolve(const WeightMap& a, const WeightMap& b);

/// Inverse of weights_of: peel off the lexicographically largest dominant
/// weight until empty. Throws ValidationError (naming the offending weight)
/// if the input is not the weight system of a virtual character.
VirtualCharacter decompose_weights(int g, const WeightMap& w);

/// Tensor product in the representation ring. Irreducible products are
/// memoized. Throws ValidationError on rank mismatch.
VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b);

/// Character of the j-th exterior power of the standard 2g-dimensional
/// representation, 0 <= j <= 2g.
VirtualCharacter exterior_standard(int g, int j);

/// Exact character value at an integer torus point (x_1, ..., x_g), as a
/// Laurent weight sum. Turns tensor products into products of rationals.
Rat evaluate(const VirtualCharacter& v, std::span<const Int> point);

}  // namespace abvar
