#pragma once

#include <string>
#include <vector>

#include "abvar/errors.hpp"
#include "abvar/numeric.hpp"

namespace abvar {

/// Truncated integer q-expansion a_0 + a_1 q + ... + a_N q^N of a level-1
/// modular form.
struct QExpansion {
    std::vector<Int> coeffs;  // index = exponent of q; size N+1
    int weight = 0;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const Int& at(int n) const;

    QExpansion truncated(int N) const;
    friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator+(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator-(const QExpansion& a, const QExpansion& b);
    bool operator==(const QExpansion&) const = default;
};

enum class Series { E4, E6, Delta, F18 };

/// q-expansion to order N. E_k by divisor sums, Delta by the eta product
/// q prod (1-q^n)^24, F18 = Delta * E6.
QExpansion qexp(Series s, int N);

/// Delta via (E4^3 - E6^2)/1728, the cross-check route.
QExpansion delta_by_eisenstein(int N);

/// dim S_k(SL2(Z)); 0 for odd or nonpositive k, and -1 at k = 2 by the
/// standard convention for the Euler characteristic bookkeeping.
int dim_cusp_sl2(int k);

/// p-th Hecke eigenvalue of the unique normalized eigenform of weight k,
/// for k in {12, 16, 18, 20, 22, 26}. Throws ValidationError otherwise.
Int hecke_ap(int k, const Int& p);

/// Trace of Frob_{p^r} on the 2-dimensional representation attached to an
/// eigenform of weight k: t_0 = 2, t_1 = a_p, t_r = a_p t_{r-1} - p^{k-1} t_{r-2}.
Int frob_trace_power(const Int& ap, int k, const Int& p, int r);

}  // namespace abvar
