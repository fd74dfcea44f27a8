#pragma once

#include <vector>

#include "abvar/motive.hpp"

namespace abvar {

/// Dense integer polynomial in q, ascending coefficients, no trailing zeros.
struct Poly {
    std::vector<Int> c;

    Poly() = default;
    explicit Poly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly monomial(int e, Int coeff = 1);
    static Poly constant(Int v) { return monomial(0, std::move(v)); }

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Int coeff(int e) const;
    const Int& leading() const;
    Int eval(const Int& q) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    bool operator==(const Poly&) const = default;

    std::string str() const;  // descending powers, e.g. "q^3+6q^2+6q-2"
};

/// quotient and remainder of a by b (b with invertible-by-content leading
/// coefficient; exact integer division, used with monic denominators)
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// primitive gcd, positive leading coefficient
Poly poly_gcd(Poly a, Poly b);

/// Exact ratio of integer polynomials in q. Canonical form: gcd removed,
/// denominator with positive leading coefficient, both primitive jointly
/// up to an integer scalar on the numerator.
struct RationalFunction {
    Poly num;
    Poly den = Poly::constant(1);

    RationalFunction() = default;
    RationalFunction(Poly n, Poly d);

    static RationalFunction from_poly(Poly p) { return {std::move(p), Poly::constant(1)}; }

    bool is_polynomial() const { return den.degree() == 0 && den.coeff(0) == 1; }
    Rat eval(const Int& q) const;

    friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
    bool operator==(const RationalFunction&) const = default;

    std::string str() const;
};

/// Truncated exact power series: coefficients of x^0..x^order.
struct PowerSeries {
    std::vector<Rat> c;

    int order() const { return static_cast<int>(c.size()) - 1; }
    Rat at(int i) const { return i <= order() ? c[size_t(i)] : Rat(0); }
    bool operator==(const PowerSeries&) const = default;
};

/// Moment in the display normal form: exact value together with
/// quotient + remainder/denominator, remainder degree < denominator degree.
struct MomentReport {
    int g = 1;
    int n = 0;
    RationalFunction exact;
    Poly quotient;
    Poly remainder;
    Poly denominator;
};

/// Tate motive -> polynomial in q (trace with L -> q). Throws for symbols or
/// negative powers.
Poly motive_to_poly(const Motive& m);

/// The weighted count of abelian varieties in symbolic form: q, q^3+q^2, ...
Poly class_count(int g);
Int class_count_at(int g, const Int& q);

/// Exact moment as a rational function of q; only defined when the Euler
/// characteristic is Tate type (throws EvaluationError pointing at numeric
/// mode otherwise).
RationalFunction moment_symbolic(int g, int n);

/// Exact moment at a concrete prime power.
Rat moment_at(int g, int n, const Int& q, const EigenvalueSource& eig = hecke_eigenvalues());

/// Normal-form reports for n = 0..max_n (max_n within the Tate range).
std::vector<MomentReport> mgf_terms(int g, int max_n);

/// Number of partitions of i into odd parts.
Int odd_partitions(int i);

/// Hilbert series of the stable cohomology ring for n marked factors,
/// expanded to order K.
PowerSeries hilbert_series(int n, int K);

/// Coefficients of (1 - x)^(-n(n+1)/2): the stable-range moment predictions.
PowerSeries lambda_moment_series(int n, int K);

/// Number of leading coefficients of the q^(-1)-expansion of
/// q^(-ng) E(#A^n) that agree with lambda_moment_series(n).
int asymptotic_consistency(int g, int n);

}  // namespace abvar
