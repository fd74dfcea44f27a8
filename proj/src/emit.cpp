#include "abvar/emit.hpp"

#include <sstream>

namespace abvar {

namespace {

// coefficients cross the JSON surface as 64-bit integers; everything in the
// validated ranges fits with room to spare
std::int64_t to_i64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw ValidationError("coefficient too large for the JSON surface");
    return static_cast<std::int64_t>(v);
}

}  // namespace

json motive_to_json(const Motive& m) {
    json terms = json::array();
    for (const auto& [t, c] : m.terms)
        terms.push_back({{"coeff", to_i64(c)}, {"l", t.second}, {"sym", t.first.str()}});
    return json{{"terms", std::move(terms)}};
}

Motive motive_from_json(const json& j) {
    Motive m;
    for (const auto& t : j.at("terms"))
        m.add_term(MotiveSymbol::parse(t.at("sym").get<std::string>()), t.at("l").get<int>(),
                   Int(t.at("coeff").get<std::int64_t>()));
    return m;
}

std::string motive_to_latex(const Motive& m) {
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
        bool coeff_shown = (a != 1) || (s.is_unit() && l == 0);
        if (coeff_shown) os << a;
        if (!s.is_unit()) {
            switch (s.kind) {
                case MotiveSymbol::Kind::Unit: break;
                case MotiveSymbol::Kind::Elliptic:
                    os << "\\mathbb{S}_{\\Gamma(1)}[" << s.w[0] << "]";
                    break;
                case MotiveSymbol::Kind::Siegel2:
                    os << "\\mathbb{S}_{\\Gamma(1)}[" << s.w[0] << "," << s.w[1] << "]";
                    break;
                case MotiveSymbol::Kind::Siegel3:
                    os << "\\mathbb{S}_{\\Gamma(1)}[" << s.w[0] << "," << s.w[1] << ","
                       << s.w[2] << "]";
                    break;
            }
        }
        if (l != 0) {
            os << "\\mathbb{L}";
            if (l != 1) os << "^{" << l << "}";
        }
        first = false;
    }
    return os.str();
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (int e = p.degree(); e >= 0; --e)
        if (p.coeff(e) != 0) arr.push_back(json::array({e, to_i64(p.coeff(e))}));
    return arr;
}

Poly poly_from_json(const json& j) {
    Poly p;
    for (const auto& pair : j)
        p += Poly::monomial(pair.at(0).get<int>(), Int(pair.at(1).get<std::int64_t>()));
    return p;
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

json series_to_json(const PowerSeries& s) {
    json arr = json::array();
    for (const auto& v : s.c) arr.push_back(rat_to_string(v));
    return arr;
}

PowerSeries series_from_json(const json& j) {
    PowerSeries s;
    for (const auto& v : j) s.c.push_back(rat_from_string(v.get<std::string>()));
    return s;
}

json table_to_json(const CohomologyTable& t) {
    json rows = json::array();
    for (const auto& [i, h] : t.rows) rows.push_back({{"i", i}, {"h", motive_to_json(h)}});
    return json{{"g", t.g}, {"n", t.n}, {"rows", std::move(rows)}};
}

CohomologyTable table_from_json(const json& j) {
    CohomologyTable t;
    t.g = j.at("g").get<int>();
    t.n = j.at("n").get<int>();
    for (const auto& row : j.at("rows")) {
        Motive h = motive_from_json(row.at("h"));
        if (!h.is_zero()) t.rows.emplace(row.at("i").get<int>(), std::move(h));
    }
    return t;
}

std::string table_to_text(const CohomologyTable& t) {
    std::ostringstream os;
    int top = t.rows.empty() ? 0 : t.rows.rbegin()->first;
    for (int i = 0; i <= top; ++i) {
        auto it = t.rows.find(i);
        os << "H^" << i << ": " << (it == t.rows.end() ? "0" : motive_str(it->second))
           << "\n";
    }
    return os.str();
}

std::string table_to_latex(const CohomologyTable& t) {
    std::ostringstream os;
    os << "\\begin{tabular}{|c|c|}\n\\hline\n";
    os << "$i$ & $H^i$\\\\\n\\hline\n";
    int top = t.rows.empty() ? 0 : t.rows.rbegin()->first;
    for (int i = 0; i <= top; ++i) {
        auto it = t.rows.find(i);
        os << "$" << i << "$ & $"
           << (it == t.rows.end() ? std::string("0") : motive_to_latex(it->second))
           << "$\\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
    return os.str();
}

json report_to_json(const MomentReport& r) {
    return json{{"g", r.g},
                {"n", r.n},
                {"quotient", poly_to_json(r.quotient)},
                {"remainder", poly_to_json(r.remainder)},
                {"denominator", poly_to_json(r.denominator)}};
}

MomentReport report_from_json(const json& j) {
    MomentReport r;
    r.g = j.at("g").get<int>();
    r.n = j.at("n").get<int>();
    r.quotient = poly_from_json(j.at("quotient"));
    r.remainder = poly_from_json(j.at("remainder"));
    r.denominator = poly_from_json(j.at("denominator"));
    r.exact = RationalFunction(r.quotient * r.denominator + r.remainder, r.denominator);
    return r;
}

std::string report_to_text(const MomentReport& r) {
    std::ostringstream os;
    os << r.quotient.str();
    if (!r.remainder.is_zero()) {
        bool negate = r.remainder.leading() < 0;
        Poly shown = r.remainder;
        if (negate)
            for (auto& v : shown.c) v = -v;
        os << (negate ? "-" : "+") << "(" << shown.str() << ")/(" << r.denominator.str()
           << ")";
    }
    return os.str();
}

std::string reports_to_csv(const std::vector<MomentReport>& rs) {
    std::ostringstream os;
    os << "g,n,moment,quotient,remainder,denominator\n";
    for (const auto& r : rs)
        os << r.g << "," << r.n << "," << r.exact.str() << "," << r.quotient.str() << ","
           << r.remainder.str() << "," << r.denominator.str() << "\n";
    return os.str();
}

std::string reports_to_latex(const std::vector<MomentReport>& rs) {
    auto poly_latex = [](const Poly& p) {
        std::string s = p.str();
        std::string out;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '^') {
                out += "^{";
                size_t j = i + 1;
                while (j < s.size() && isdigit(s[j])) out += s[j++];
                out += "}";
                i = j - 1;
            } else {
                out += s[i];
            }
        }
        return out;
    };
    std::ostringstream os;
    os << "\\begin{tabular}{|c|c|}\n\\hline\n$n$ & $\\mathbb{E}$\\\\\n\\hline\n";
    for (const auto& r : rs) {
        os << "$" << r.n << "$ & $" << poly_latex(r.quotient);
        if (!r.remainder.is_zero())
            os << "+\\frac{" << poly_latex(r.remainder) << "}{" << poly_latex(r.denominator)
               << "}";
        os << "$\\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
    return os.str();
}

json census_to_json(const CensusReport& r) {
    json moments = json::array();
    for (const auto& m : r.moments) moments.push_back(rat_to_string(m));
    return json{{"p", r.p},
                {"weighted_class_count", rat_to_string(r.weighted_class_count)},
                {"moments", std::move(moments)}};
}

CensusReport census_from_json(const json& j) {
    CensusReport r;
    r.p = j.at("p").get<long>();
    r.weighted_class_count = rat_from_string(j.at("weighted_class_count").get<std::string>());
    for (const auto& m : j.at("moments")) r.moments.push_back(rat_from_string(m.get<std::string>()));
    return r;
}

std::string census_to_csv(const CensusReport& r) {
    std::ostringstream os;
    os << "p,n,moment\n";
    for (size_t n = 0; n < r.moments.size(); ++n)
        os << r.p << "," << n << "," << rat_to_string(r.moments[n]) << "\n";
    return os.str();
}

std::string comparisons_to_csv(const std::vector<CensusComparison>& rows) {
    std::ostringstream os;
    os << "p,n,census,formula,match\n";
    for (const auto& c : rows)
        os << c.p << "," << c.n << "," << rat_to_string(c.census) << ","
           << rat_to_string(c.formula) << "," << (c.match ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace abvar
