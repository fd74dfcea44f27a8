#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>

#include "abvar/errors.hpp"
#include "abvar/numeric.hpp"

namespace abvar {

/// Basis symbol of the Grothendieck group: the unit, or a cusp-form symbol
/// S1[k], S2[j,k], S3[a,b,c].
struct MotiveSymbol {
    enum class Kind { Unit = 0, Elliptic = 1, Siegel2 = 2, Siegel3 = 3 };

    Kind kind = Kind::Unit;
    std::array<int, 3> w{};

    static MotiveSymbol unit() { return {}; }
    static MotiveSymbol elliptic(int k) { return {Kind::Elliptic, {k, 0, 0}}; }
    static MotiveSymbol siegel2(int j, int k) { return {Kind::Siegel2, {j, k, 0}}; }
    static MotiveSymbol siegel3(int a, int b, int c) { return {Kind::Siegel3, {a, b, c}}; }

    bool is_unit() const { return kind == Kind::Unit; }

    /// motivic weight: 0, k-1, j+2k-3, a+2b+3c-6
    int motivic_weight() const;

    auto operator<=>(const MotiveSymbol&) const = default;

    std::string str() const;                        // "1" | "S1[k]" | "S2[j,k]" | "S3[a,b,c]"
    static MotiveSymbol parse(const std::string&);  // inverse of str()
};

/// Term ordering: (symbol, l) descending, so Siegel pieces precede the Tate
/// part and higher Lefschetz powers come first.
struct MotiveTermOrder {
    using Term = std::pair<MotiveSymbol, int>;
    bool operator()(const Term& a, const Term& b) const { return b < a; }
};

/// Integer combination of symbols times powers of the Lefschetz motive L.
/// Canonical form: no zero coefficients, deterministic descending order.
struct Motive {
    using Term = std::pair<MotiveSymbol, int>;
    std::map<Term, Int, MotiveTermOrder> terms;

    Motive() = default;

    static Motive zero() { return {}; }
    static Motive unit() { return lefschetz_power(0); }
    static Motive lefschetz_power(int k, Int c = 1);
    static Motive symbol(const MotiveSymbol& s, int l = 0, Int c = 1);

    bool is_zero() const { return terms.empty(); }
    Int coeff(const MotiveSymbol& s, int l) const;

    Motive& add_term(const MotiveSymbol& s, int l, const Int& c);
    Motive& operator+=(const Motive& o);
    Motive& operator-=(const Motive& o);
    Motive& operator*=(const Int& c);
    friend Motive operator+(Motive a, const Motive& b) { return a += b; }
    friend Motive operator-(Motive a, const Motive& b) { return a -= b; }
    friend Motive operator*(Motive a, const Int& c) { return a *= c; }

    /// ring product; throws UnsupportedProductError if two non-unit symbols
    /// would have to be multiplied
    friend Motive operator*(const Motive& a, const Motive& b);

    bool operator==(const Motive&) const = default;
};

/// Known dimensions of the cusp-form spaces behind each symbol.
/// Lookups outside the shipped data return nullopt (unknown), never a guess.
class DimensionTable {
  public:
    static const DimensionTable& standard();
    std::optional<Int> dimension(const MotiveSymbol& s) const;
};

enum class Ternary { Yes, No, Unknown };

/// Applies, in order: the convention substitutions S1[2] -> -L-1,
/// S2[0,3] -> -L^3-L^2-L-1, S3[0,0,4] -> L^6+L^5+L^4+2L^3+L^2+L+1; the
/// Saito-Kurokawa substitution S2[0,10] -> S1[18]+L^9+L^8; then drops every
/// symbol whose known dimension is zero. Unknown symbols pass through.
Motive normalize(const Motive& m);

/// Yes iff only unit symbols remain; No if a known-positive-dimension symbol
/// remains; Unknown otherwise. Expects a normalized motive.
Ternary is_tate(const Motive& m);

/// Poincare duality at ambient dimension d: c*S*L^k -> c*S*L^(d - w(S) - k).
Motive dual(const Motive& m, int d);

/// Frobenius eigenvalue source for trace evaluation.
class EigenvalueSource {
  public:
    virtual ~EigenvalueSource() = default;
    /// trace of Frob_{p^r} on the 2-dimensional piece of weight-k eigenforms
    /// (only called when dim S_k = 1)
    virtual Int frobenius_trace(int k, const Int& p, int r) const = 0;
};

/// Default source backed by the level-1 q-expansions.
const EigenvalueSource& hecke_eigenvalues();

/// Frobenius trace at q = p^r: L^k -> q^k, one-dimensional elliptic symbols
/// via the eigenvalue source. Throws EvaluationError for symbols without an
/// eigenvalue source. Expects a normalized motive; q must be a prime power.
Rat trace(const Motive& m, const Int& q, const EigenvalueSource& eig = hecke_eigenvalues());

std::string motive_str(const Motive& m);  // compact text form, e.g. "-S1[12]-1"

}  // namespace abvar
