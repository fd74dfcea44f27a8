#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "abvar/census.hpp"
#include "abvar/emit.hpp"
#include "abvar/kunneth.hpp"
#include "abvar/modforms.hpp"
#include "abvar/verify.hpp"

using namespace abvar;

namespace {

int fail(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 1;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw ValidationError("format '" + format + "' is not supported for this value");
}

int cmd_euler(int g, int n, const std::string& format) {
    Motive ec = ec_universal(g, n);
    require_format(format, {"text", "json", "latex"});
    if (format == "text")
        std::cout << motive_str(ec) << "\n";
    else if (format == "json")
        std::cout << motive_to_json(ec).dump() << "\n";
    else
        std::cout << motive_to_latex(ec) << "\n";
    return 0;
}

int cmd_cohomology(int g, int n, const std::string& format) {
    if (g != 1) throw ValidationError("per-degree tables are computed for g = 1 only");
    CohomologyTable t = cohomology_table_g1(n);
    require_format(format, {"text", "json", "latex"});
    if (format == "text")
        std::cout << table_to_text(t);
    else if (format == "json")
        std::cout << table_to_json(t).dump() << "\n";
    else
        std::cout << table_to_latex(t);
    return 0;
}

int cmd_moment(int g, int n, const std::string& q, const std::string& format) {
    if (q == "symbolic") {
        auto reports = mgf_terms(g, n);
        const MomentReport& r = reports[size_t(n)];
        require_format(format, {"text", "json", "latex", "csv"});
        if (format == "text")
            std::cout << report_to_text(r) << "\n";
        else if (format == "json")
            std::cout << report_to_json(r).dump() << "\n";
        else if (format == "csv")
            std::cout << reports_to_csv({r});
        else
            std::cout << reports_to_latex({r});
        return 0;
    }
    Int qv(q);
    Rat value = moment_at(g, n, qv);
    require_format(format, {"text", "json"});
    if (format == "text")
        std::cout << rat_to_string(value) << "\n";
    else
        std::cout << json{{"g", g}, {"n", n}, {"q", q}, {"moment", rat_to_string(value)}}.dump()
                  << "\n";
    return 0;
}

int cmd_mgf(int g, int max_n, const std::string& format) {
    auto reports = mgf_terms(g, max_n);
    require_format(format, {"text", "json", "csv", "latex"});
    if (format == "text") {
        for (const auto& r : reports)
            std::cout << "n=" << r.n << ": " << report_to_text(r) << "\n";
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        std::cout << arr.dump() << "\n";
    } else if (format == "csv") {
        std::cout << reports_to_csv(reports);
    } else {
        std::cout << reports_to_latex(reports);
    }
    return 0;
}

int cmd_census(long p, int max_n, bool compare, const std::string& format) {
    if (compare) {
        auto rows = census_vs_formula(p, max_n);
        require_format(format, {"text", "csv", "json"});
        if (format == "json") {
            json arr = json::array();
            for (const auto& c : rows)
                arr.push_back({{"p", c.p},
                               {"n", c.n},
                               {"census", rat_to_string(c.census)},
                               {"formula", rat_to_string(c.formula)},
                               {"match", c.match}});
            std::cout << arr.dump() << "\n";
        } else {
            std::cout << comparisons_to_csv(rows);
        }
        bool all = true;
        for (const auto& c : rows) all = all && c.match;
        return all ? 0 : 2;
    }
    auto report = census_moments(p, max_n);
    require_format(format, {"text", "csv", "json"});
    if (format == "json")
        std::cout << census_to_json(report).dump() << "\n";
    else
        std::cout << census_to_csv(report);
    return 0;
}

int cmd_hecke(int k, long p, const std::string& format) {
    Int ap = hecke_ap(k, p);
    require_format(format, {"text", "json"});
    if (format == "text")
        std::cout << ap << "\n";
    else
        std::cout << json{{"k", k}, {"p", p}, {"ap", rat_to_string(Rat(ap))}}.dump() << "\n";
    return 0;
}

int cmd_series(const std::string& kind, int n, int order, const std::string& format) {
    PowerSeries s;
    if (kind == "hilbert")
        s = hilbert_series(n, order);
    else if (kind == "lambda")
        s = lambda_moment_series(n, order);
    else
        throw ValidationError("series kind must be hilbert or lambda");
    require_format(format, {"text", "json"});
    if (format == "json") {
        std::cout << series_to_json(s).dump() << "\n";
    } else {
        for (int i = 0; i <= s.order(); ++i)
            std::cout << (i ? " " : "") << rat_to_string(s.at(i));
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite) {
    auto results = run_suite(suite);
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "ok   " : "FAIL ") << r.id;
        if (!r.pass) std::cout << ": " << r.detail;
        std::cout << "\n";
        failures += r.pass ? 0 : 1;
    }
    if (failures) {
        std::cerr << failures << " check(s) failed\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Euler characteristics, moments and point-count statistics "
                 "of fiber powers of universal abelian varieties (g <= 3)"};
    app.require_subcommand(1);

    int g = 1, n = 0, max_n = 0, order = 20, k = 12;
    long p = 5;
    std::string format = "text", q = "symbolic", suite = "all", kind = "hilbert";
    bool compare = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text, json, csv or latex")
            ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    };

    auto* euler = app.add_subcommand("euler", "Euler characteristic of the n-th fiber power");
    euler->add_option("--g", g, "genus (1-3)")->required()->check(CLI::Range(1, 3));
    euler->add_option("--n", n, "fiber power")->required()->check(CLI::NonNegativeNumber);
    add_format(euler);

    auto* coh = app.add_subcommand("cohomology", "per-degree cohomology table (g = 1)");
    coh->add_option("--g", g, "genus")->required()->check(CLI::Range(1, 3));
    coh->add_option("--n", n, "fiber power (1-10)")->required();
    add_format(coh);

    auto* mom = app.add_subcommand("moment", "moment of the point-count distribution");
    mom->add_option("--g", g, "genus (1-3)")->required()->check(CLI::Range(1, 3));
    mom->add_option("--n", n, "moment order")->required()->check(CLI::NonNegativeNumber);
    mom->add_option("--q", q, "prime power, or 'symbolic'");
    add_format(mom);

    auto* mgf = app.add_subcommand("mgf", "moment generating function terms");
    mgf->add_option("--g", g, "genus (1-3)")->required()->check(CLI::Range(1, 3));
    mgf->add_option("--max-n", max_n, "largest moment")->required();
    add_format(mgf);

    auto* cen = app.add_subcommand("census", "brute-force elliptic curve census");
    cen->add_option("--p", p, "prime >= 5")->required();
    cen->add_option("--max-n", max_n, "largest moment")->required();
    cen->add_flag("--compare", compare, "compare against the cohomological formula");
    add_format(cen);

    auto* hec = app.add_subcommand("hecke", "Hecke eigenvalue of a one-dimensional space");
    hec->add_option("--k", k, "weight (12, 16, 18, 20, 22 or 26)")->required();
    hec->add_option("--p", p, "prime")->required();
    add_format(hec);

    auto* ser = app.add_subcommand("series", "stable cohomology series");
    ser->add_option("--kind", kind, "hilbert or lambda");
    ser->add_option("--n", n, "marked factors / moment order")->required();
    ser->add_option("--order", order, "truncation order");
    add_format(ser);

    auto* ver = app.add_subcommand("verify", "run the verification suites");
    ver->add_option("--suite", suite, "all, fixtures, invariants or census")
        ->check(CLI::IsMember({"all", "fixtures", "invariants", "census"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (euler->parsed()) return cmd_euler(g, n, format);
        if (coh->parsed()) return cmd_cohomology(g, n, format);
        if (mom->parsed()) return cmd_moment(g, n, q, format);
        if (mgf->parsed()) return cmd_mgf(g, max_n, format);
        if (cen->parsed()) return cmd_census(p, max_n, compare, format);
        if (hec->parsed()) return cmd_hecke(k, p, format);
        if (ser->parsed()) return cmd_series(kind, n, order, format);
        if (ver->parsed()) return cmd_verify(suite);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return fail("no subcommand given");
}
