#pragma once

#include <map>

#include "abvar/char_ring.hpp"
#include "abvar/motive.hpp"

namespace abvar {

/// Direct image of the n-th fiber power, graded by cohomological degree:
/// layer j is the decomposition of the degree-j piece into irreducibles.
struct GradedCharacter {
    int g = 1;
    int n = 0;
    std::map<int, VirtualCharacter> layers;  // zero layers absent

    VirtualCharacter layer(int j) const {
        auto it = layers.find(j);
        return it == layers.end() ? VirtualCharacter::zero(g) : it->second;
    }
};

/// Laurent polynomial in the Lefschetz motive.
struct LaurentPoly {
    std::map<int, Int> coeffs;  // exponent -> coefficient, zeros absent

    LaurentPoly& add(int e, const Int& c) {
        auto [it, fresh] = coeffs.try_emplace(e, c);
        if (!fresh) it->second += c;
        if (it->second == 0) coeffs.erase(it);
        return *this;
    }
    Motive as_motive() const {
        Motive m;
        for (const auto& [e, c] : coeffs) m.add_term(MotiveSymbol::unit(), e, c);
        return m;
    }
    bool operator==(const LaurentPoly&) const = default;
};

/// Per-degree cohomology of a fiber power, as motives.
struct CohomologyTable {
    int g = 1;
    int n = 0;
    std::map<int, Motive> rows;  // degree -> class; zero rows absent

    bool operator==(const CohomologyTable&) const = default;
};

/// n-th graded tensor power of the exterior algebra of the standard
/// representation: the layers of the direct image sheaf. Memoized per (g, n).
const GradedCharacter& graded_exterior_power(int g, int n);

/// Multiplicity of V_lambda in layer j.
Int multiplicity(int g, int n, int j, const HighestWeight& lambda);

/// Twist polynomial f^n_lambda = sum_j (-1)^j m^{j,n}_lambda L^((j-|lambda|)/2).
LaurentPoly f_poly(int g, int n, const HighestWeight& lambda);

/// Euler characteristic of the n-th fiber power of the universal family,
/// assembled from the twist polynomials and the local-system values.
/// n beyond the fixture-validated range (g=1: 10, g=2: 7, g=3: 6) is allowed
/// but warns on stderr; symbol resolution may then be incomplete.
Motive ec_universal(int g, int n);

/// Per-degree cohomology of the genus-1 fiber powers, 1 <= n <= 10.
CohomologyTable cohomology_table_g1(int n);

/// Poincare duality: L^d-twisted dual of the alternating sum of the table
/// equals the compactly supported Euler characteristic.
bool duality_check(const CohomologyTable& table, const Motive& ec);

/// dim X_g^n = g(g+1)/2 + ng.
inline int fiber_power_dim(int g, int n) { return g * (g + 1) / 2 + n * g; }

}  // namespace abvar
