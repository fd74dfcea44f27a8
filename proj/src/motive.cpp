#include "abvar/motive.hpp"

#include <sstream>

#include "abvar/modforms.hpp"

namespace abvar {

int MotiveSymbol::motivic_weight() const {
    switch (kind) {
        case Kind::Unit: return 0;
        case Kind::Elliptic: return w[0] - 1;
        case Kind::Siegel2: return w[0] + 2 * w[1] - 3;
        case Kind::Siegel3: return w[0] + 2 * w[1] + 3 * w[2] - 6;
    }
    throw Error("bad symbol kind");
}

std::string MotiveSymbol::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Unit: return "1";
        case Kind::Elliptic: os << "S1[" << w[0] << "]"; break;
        case Kind::Siegel2: os << "S2[" << w[0] << "," << w[1] << "]"; break;
        case Kind::Siegel3: os << "S3[" << w[0] << "," << w[1] << "," << w[2] << "]"; break;
    }
    return os.str();
}

MotiveSymbol MotiveSymbol::parse(const std::string& s) {
    if (s == "1") return unit();
    if (s.size() < 5 || s[0] != 'S' || s[2] != '[' || s.back() != ']')
        throw ValidationError("bad motive symbol: " + s);
    int rank = s[1] - '0';
    std::array<int, 3> w{};
    int i = 0;
    std::string body = s.substr(3, s.size() - 4);
    std::istringstream is(body);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        if (i >= rank) throw ValidationError("bad motive symbol: " + s);
        w[size_t(i++)] = std::stoi(piece);
    }
    if (i != rank || rank < 1 || rank > 3) throw ValidationError("bad motive symbol: " + s);
    switch (rank) {
        case 1: return elliptic(w[0]);
        case 2: return siegel2(w[0], w[1]);
        default: return siegel3(w[0], w[1], w[2]);
    }
}

Motive Motive::lefschetz_power(int k, Int c) { return symbol(MotiveSymbol::unit(), k, c); }

Motive Motive::symbol(const MotiveSymbol& s, int l, Int c) {
    Motive m;
    if (c != 0) m.terms.emplace(Term{s, l}, std::move(c));
    return m;
}

Int Motive::coeff(const MotiveSymbol& s, int l) const {
    auto it = terms.find({s, l});
    return it == terms.end() ? Int(0) : it->second;
}

Motive& Motive::add_term(const MotiveSymbol& s, int l, const Int& c) {
    auto [it, fresh] = terms.try_emplace({s, l}, c);
    if (!fresh) it->second += c;
    if (it->second == 0) terms.erase(it);
    return *this;
}

Motive& Motive::operator+=(const Motive& o) {
    for (const auto& [t, c] : o.terms) add_term(t.first, t.second, c);
    return *this;
}

Motive& Motive::operator-=(const Motive& o) {
    for (const auto& [t, c] : o.terms) add_term(t.first, t.second, -c);
    return *this;
}

Motive& Motive::operator*=(const Int& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [t, v] : terms) v *= c;
    return *this;
}

Motive operator*(const Motive& a, const Motive& b) {
    Motive out;
    for (const auto& [ta, ca] : a.terms)
        for (const auto& [tb, cb] : b.terms) {
            const auto& [sa, la] = ta;
            const auto& [sb, lb] = tb;
            if (!sa.is_unit() && !sb.is_unit())
                throw UnsupportedProductError("unsupported symbol product " + sa.str() + " * " +
                                              sb.str());
            const MotiveSymbol& s = sa.is_unit() ? sb : sa;
            out.add_term(s, la + lb, ca * cb);
        }
    return out;
}

const DimensionTable& DimensionTable::standard() {
    static DimensionTable t;
    return t;
}

std::optional<Int> DimensionTable::dimension(const MotiveSymbol& s) const {
    switch (s.kind) {
        case MotiveSymbol::Kind::Unit: return Int(1);
        case MotiveSymbol::Kind::Elliptic: {
            int k = s.w[0];
            if (k == 2) return std::nullopt;  // conventional symbol, not a dimension
            return Int(dim_cusp_sl2(k));
        }
        case MotiveSymbol::Kind::Siegel2: {
            int j = s.w[0], k = s.w[1];
            // vector-valued dimensions known in the range reached from
            // lambda_1, lambda_2 <= 7, plus the two general-type spaces that
            // first enter at the 11th fiber power
            if (j == 0 && k == 10) return Int(1);
            if (j == 6 && k == 8) return Int(1);
            if (j == 4 && k == 10) return Int(1);
            int l2 = k - 3, l1 = j + k - 3;
            if (l2 >= 0 && l1 <= 7) return Int(0);
            return std::nullopt;
        }
        case MotiveSymbol::Kind::Siegel3: {
            int a = s.w[0], b = s.w[1], c = s.w[2];
            if (a == 3 && b == 3 && c == 7) return Int(1);
            int l3 = c - 4, l1 = a + b + c - 4;
            if (l3 >= 0 && l1 <= 6) return Int(0);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

Motive normalize(const Motive& m) {
    static const MotiveSymbol s1_2 = MotiveSymbol::elliptic(2);
    static const MotiveSymbol s2_03 = MotiveSymbol::siegel2(0, 3);
    static const MotiveSymbol s3_004 = MotiveSymbol::siegel3(0, 0, 4);
    static const MotiveSymbol sk = MotiveSymbol::siegel2(0, 10);

    Motive out;
    const auto& table = DimensionTable::standard();
    for (const auto& [t, c] : m.terms) {
        const auto& [s, l] = t;
        if (s == s1_2) {
            // S1[2] := -L - 1
            out.add_term(MotiveSymbol::unit(), l + 1, -c);
            out.add_term(MotiveSymbol::unit(), l, -c);
            continue;
        }
        if (s == s2_03) {
            // S2[0,3] := -L^3 - L^2 - L - 1
            for (int e = 0; e <= 3; ++e) out.add_term(MotiveSymbol::unit(), l + e, -c);
            continue;
        }
        if (s == s3_004) {
            // S3[0,0,4] := L^6 + L^5 + L^4 + 2L^3 + L^2 + L + 1
            for (int e = 0; e <= 6; ++e)
                out.add_term(MotiveSymbol::unit(), l + e, e == 3 ? 2 * c : c);
            continue;
        }
        if (s == sk) {
            // Saito-Kurokawa: S2[0,10] = S1[18] + L^9 + L^8
            out.add_term(MotiveSymbol::elliptic(18), l, c);
            out.add_term(MotiveSymbol::unit(), l + 9, c);
            out.add_term(MotiveSymbol::unit(), l + 8, c);
            continue;
        }
        if (!s.is_unit()) {
            auto d = table.dimension(s);
            if (d && *d == 0) continue;  // zero-dimensional space
        }
        out.add_term(s, l, c);
    }
    return out;
}

Ternary is_tate(const Motive& m) {
    bool unknown = false;
    const auto& table = DimensionTable::standard();
    for (const auto& [t, c] : m.terms) {
        const auto& s = t.first;
        if (s.is_unit()) continue;
        auto d = table.dimension(s);
        if (d && *d > 0) return Ternary::No;
        if (!d) unknown = true;
    }
    return unknown ? Ternary::Unknown : Ternary::Yes;
}

Motive dual(const Motive& m, int d) {
    Motive out;
    for (const auto& [t, c] : m.terms)
        out.add_term(t.first, d - t.first.motivic_weight() - t.second, c);
    return out;
}

namespace {

class ModformSource final : public EigenvalueSource {
  public:
    Int frobenius_trace(int k, const Int& p, int r) const override {
        return frob_trace_power(hecke_ap(k, p), k, p, r);
    }
};

// q = p^r for a prime p; returns (p, r) or throws
std::pair<Int, int> prime_power_split(const Int& q) {
    if (q < 2) throw ValidationError("q must be a prime power >= 2");
    Int n = q;
    Int p = 0;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {n, 1};
    int r = 0;
    while (n % p == 0) {
        n /= p;
        ++r;
    }
    if (n != 1) throw ValidationError("q is not a prime power");
    return {p, r};
}

}  // namespace

const EigenvalueSource& hecke_eigenvalues() {
    static ModformSource src;
    return src;
}

Rat trace(const Motive& m, const Int& q, const EigenvalueSource& eig) {
    auto [p, r] = prime_power_split(q);
    const auto& table = DimensionTable::standard();
    Rat total = 0;
    for (const auto& [t, c] : m.terms) {
        const auto& [s, l] = t;
        Rat lpart = rat_pow(q, l);
        if (s.is_unit()) {
            total += Rat(c) * lpart;
            continue;
        }
        auto d = table.dimension(s);
        if (s.kind == MotiveSymbol::Kind::Elliptic && d && *d == 1) {
            total += Rat(c) * lpart * Rat(eig.frobenius_trace(s.w[0], p, r));
            continue;
        }
        throw EvaluationError("no eigenvalue source for symbol " + s.str());
    }
    return total;
}

std::string motive_str(const Motive& m) {
    if (m.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : m.terms) {
        const auto& [s, l] = t;
        Int a = abs(c);
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        bool unit_sym = s.is_unit();
        bool coeff_printed = (a != 1) || (unit_sym && l == 0);
        if (coeff_printed) os << a;
        if (!unit_sym) {
            if (coeff_printed) os << "*";
            os << s.str();
        }
        if (l != 0) {
            if (!unit_sym) os << "*";  // a bare coefficient adjoins L directly
            os << (l == 1 ? "L" : "L^" + std::to_string(l));
        }
        first = false;
    }
    return os.str();
}

}  // namespace abvar
