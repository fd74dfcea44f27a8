#include "abvar/moments.hpp"

#include <numeric>
#include <sstream>

#include "abvar/kunneth.hpp"

namespace abvar {

Poly Poly::monomial(int e, Int coeff) {
    Poly p;
    if (coeff == 0) return p;
    if (e < 0) throw ValidationError("negative exponent in polynomial");
    p.c.assign(size_t(e) + 1, 0);
    p.c.back() = std::move(coeff);
    return p;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Int Poly::coeff(int e) const {
    if (e < 0 || e > degree()) return 0;
    return c[size_t(e)];
}

const Int& Poly::leading() const {
    if (is_zero()) throw ValidationError("zero polynomial has no leading coefficient");
    return c.back();
}

Int Poly::eval(const Int& q) const {
    Int r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * q + *it;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const Int& v = c[size_t(e)];
        if (v == 0) continue;
        Int a = abs(v);
        if (v < 0)
            os << "-";
        else if (!first)
            os << "+";
        if (a != 1 || e == 0) os << a;
        if (e >= 1) os << (e == 1 ? "q" : "q^" + std::to_string(e));
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ValidationError("polynomial division by zero");
    Poly rem = a, quot;
    if (a.degree() >= b.degree()) quot.c.assign(size_t(a.degree() - b.degree()) + 1, 0);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        if (rem.leading() % b.leading() != 0)
            throw ValidationError("non-exact polynomial division step");
        Int f = rem.leading() / b.leading();
        quot.c[size_t(shift)] = f;
        rem -= b * Poly::monomial(shift, f);
    }
    quot.trim();
    return {std::move(quot), std::move(rem)};
}

namespace {

Int content(const Poly& p) {
    Int g = 0;
    for (const auto& v : p.c) g = gcd(g, v);
    return g;
}

Poly primitive(Poly p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.leading() < 0) g = -g;
    for (auto& v : p.c) v /= g;
    return p;
}

// pseudo-remainder based Euclid over Z
Poly prem(Poly a, const Poly& b) {
    int d = a.degree() - b.degree();
    if (d < 0) return a;
    Int lb = b.leading();
    for (auto& v : a.c) v *= int_pow(lb, unsigned(d) + 1);
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        Int f = a.leading() / lb;
        a -= b * Poly::monomial(shift, f);
    }
    return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    while (!b.is_zero()) {
        Poly r = primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return Poly::constant(1);
    return a;
}

RationalFunction::RationalFunction(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw ValidationError("zero denominator");
    if (num.is_zero()) {
        den = Poly::constant(1);
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    Int cn = content(num), cd = content(den);
    Int s = gcd(cn, cd);
    if (den.leading() < 0) s = -s;
    for (auto& v : num.c) v /= s;
    for (auto& v : den.c) v /= s;
}

Rat RationalFunction::eval(const Int& q) const {
    Int d = den.eval(q);
    if (d == 0) throw EvaluationError("denominator vanishes at the requested point");
    return Rat(num.eval(q), d);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.num, a.den * b.den};
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num.is_zero()) throw ValidationError("division by the zero rational function");
    return {a.num * b.den, a.den * b.num};
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

Poly motive_to_poly(const Motive& m) {
    Poly p;
    for (const auto& [t, c] : m.terms) {
        if (!t.first.is_unit())
            throw EvaluationError("motive is not Tate type: symbol " + t.first.str() +
                                  " remains; use numeric evaluation");
        p += Poly::monomial(t.second, c);
    }
    return p;
}

Poly class_count(int g) { return motive_to_poly(ec_universal(g, 0)); }

Int class_count_at(int g, const Int& q) { return class_count(g).eval(q); }

RationalFunction moment_symbolic(int g, int n) {
    Motive ec = ec_universal(g, n);
    if (is_tate(ec) != Ternary::Yes)
        throw EvaluationError("Euler characteristic for g=" + std::to_string(g) +
                              ", n=" + std::to_string(n) +
                              " is not Tate type; evaluate at numeric q instead");
    return {motive_to_poly(ec), class_count(g)};
}

Rat moment_at(int g, int n, const Int& q, const EigenvalueSource& eig) {
    Rat numer = trace(ec_universal(g, n), q, eig);
    return numer / Rat(class_count_at(g, q));
}

std::vector<MomentReport> mgf_terms(int g, int max_n) {
    std::vector<MomentReport> out;
    const Poly D = class_count(g);
    for (int n = 0; n <= max_n; ++n) {
        Poly N = motive_to_poly(ec_universal(g, n));  // throws when not Tate
        auto [quot, rem] = divmod(N, D);
        MomentReport r;
        r.g = g;
        r.n = n;
        r.exact = RationalFunction(N, D);
        r.quotient = std::move(quot);
        r.remainder = std::move(rem);
        r.denominator = D;
        out.push_back(std::move(r));
    }
    return out;
}

Int odd_partitions(int i) {
    if (i < 0) throw ValidationError("negative partition size");
    std::vector<Int> dp(size_t(i) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= i; part += 2)
        for (int v = part; v <= i; ++v) dp[size_t(v)] += dp[size_t(v - part)];
    return dp[size_t(i)];
}

namespace {

// multiply a truncated series by 1/(1 - x^m)
void divide_one_minus_power(std::vector<Rat>& c, int m) {
    for (size_t k = size_t(m); k < c.size(); ++k) c[k] += c[k - size_t(m)];
}

}  // namespace

PowerSeries hilbert_series(int n, int K) {
    if (n < 0 || K < 0) throw ValidationError("bad Hilbert series arguments");
    PowerSeries s;
    s.c.assign(size_t(K) + 1, 0);
    s.c[0] = 1;
    // n theta classes and n(n-1)/2 translation classes, all in degree 2
    int quadratic = n + n * (n - 1) / 2;
    for (int i = 0; i < quadratic; ++i) divide_one_minus_power(s.c, 2);
    // stable classes in degrees 2i for odd i
    for (int i = 1; 2 * i <= K; i += 2) divide_one_minus_power(s.c, 2 * i);
    return s;
}

PowerSeries lambda_moment_series(int n, int K) {
    if (n < 0 || K < 0) throw ValidationError("bad series arguments");
    PowerSeries s;
    s.c.reserve(size_t(K) + 1);
    long m = long(n) * (n + 1) / 2;
    for (int i = 0; i <= K; ++i) s.c.push_back(Rat(binomial(m + i - 1, i)));
    return s;
}

int asymptotic_consistency(int g, int n) {
    const int K = 16;
    RationalFunction e = moment_symbolic(g, n);
    // q^{-ng} E expanded in x = 1/q: reverse numerator and denominator
    Poly N = e.num, D = e.den;
    if (N.degree() - D.degree() != n * g)
        throw Error("unexpected moment degree: " + std::to_string(N.degree()) + " vs " +
                    std::to_string(D.degree()));
    auto reversed = [](const Poly& p) {
        std::vector<Rat> r(p.c.size());
        for (size_t i = 0; i < p.c.size(); ++i) r[p.c.size() - 1 - i] = Rat(p.c[i]);
        return r;
    };
    std::vector<Rat> nr = reversed(N), dr = reversed(D);
    nr.resize(size_t(K) + 1, Rat(0));
    dr.resize(size_t(K) + 1, Rat(0));
    // series division nr/dr with dr[0] != 0
    std::vector<Rat> expansion(size_t(K) + 1);
    for (size_t k = 0; k <= size_t(K); ++k) {
        Rat acc = nr[k];
        for (size_t i = 1; i <= k; ++i) acc -= dr[i] * expansion[k - i];
        expansion[k] = acc / dr[0];
    }
    PowerSeries target = lambda_moment_series(n, K);
    int agree = 0;
    while (agree <= K && expansion[size_t(agree)] == target.at(agree)) ++agree;
    return agree;
}

}  // namespace abvar
