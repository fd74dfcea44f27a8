#include "abvar/verify.hpp"

#include <functional>
#include <sstream>

#include "abvar/census.hpp"
#include "abvar/emit.hpp"
#include "abvar/fixtures.hpp"
#include "abvar/kunneth.hpp"
#include "abvar/local_systems.hpp"
#include "abvar/modforms.hpp"

namespace abvar {

namespace {

struct Check {
    std::string id;  // suite/name
    std::function<std::string()> run;  // empty string = pass, else failure detail
};

std::string check_local_system_fixtures(int g, size_t expected_count) {
    auto table = load_local_system_fixtures(g);
    if (table.entries.size() != expected_count) {
        return "expected " + std::to_string(expected_count) + " entries, found " +
               std::to_string(table.entries.size());
    }
    for (const auto& e : table.entries) {
        Motive computed;
        if (g == 1)
            computed = ec_a1(e.lambda[0]);
        else if (g == 2)
            computed = ec_a2(e.lambda[0], e.lambda[1]);
        else
            computed = ec_a3(e.lambda[0], e.lambda[1], e.lambda[2]);
        if (computed != normalize(e.motive)) {
            std::ostringstream os;
            os << "mismatch at lambda = (";
            for (size_t i = 0; i < e.lambda.size(); ++i)
                os << (i ? "," : "") << e.lambda[i];
            os << "): computed " << motive_str(computed) << ", table has "
               << motive_str(normalize(e.motive));
            return os.str();
        }
    }
    return {};
}

std::string check_euler_fixtures(int g) {
    auto fixtures = load_euler_fixtures(g);
    for (const auto& [n, expected] : fixtures) {
        Motive computed = ec_universal(g, n);
        if (computed != normalize(expected))
            return "mismatch at n = " + std::to_string(n) + ": computed " +
                   motive_str(computed);
    }
    return {};
}

std::string check_cohomology_g1() {
    auto fixtures = load_cohomology_fixtures(1);
    for (const auto& [n, expected] : fixtures) {
        CohomologyTable computed = cohomology_table_g1(n);
        if (computed.rows.size() != expected.rows.size())
            return "row count mismatch at n = " + std::to_string(n);
        for (const auto& [i, h] : expected.rows) {
            auto it = computed.rows.find(i);
            if (it == computed.rows.end() || it->second != normalize(h))
                return "cell mismatch at n = " + std::to_string(n) +
                       ", degree " + std::to_string(i);
        }
    }
    return {};
}

std::string check_moment_fixtures(int g) {
    auto fix = load_moment_fixtures(g);
    int max_n = 0;
    for (const auto& e : fix.entries) max_n = std::max(max_n, e.n);
    auto reports = mgf_terms(g, max_n);
    if (fix.denominator != class_count(g)) return "denominator differs from the class count";
    for (const auto& e : fix.entries) {
        const auto& r = reports[size_t(e.n)];
        if (r.quotient != e.quotient)
            return "quotient mismatch at n = " + std::to_string(e.n) + ": computed " +
                   r.quotient.str() + ", expected " + e.quotient.str();
        if (r.remainder != e.remainder)
            return "remainder mismatch at n = " + std::to_string(e.n) + ": computed " +
                   r.remainder.str() + ", expected " + e.remainder.str();
    }
    return {};
}

std::string check_modular_forms() {
    if (hecke_ap(12, 2) != -24 || hecke_ap(12, 3) != 252)
        return "tau(2), tau(3) do not match the discriminant expansion";
    if (hecke_ap(18, 2) != -528) return "a_2 of the weight-18 form is not -528";
    auto delta = qexp(Series::Delta, 50);
    if (delta != delta_by_eisenstein(50))
        return "product and Eisenstein constructions disagree through order 50";
    for (int p : {2, 3, 5, 7, 11, 13})
        if (hecke_ap(12, p) != delta.at(p)) return "eigenvalue/expansion mismatch";
    return {};
}

std::string check_multiplicity_properties() {
    for (int g = 1; g <= 3; ++g)
        for (int n = 0; n <= 6; ++n) {
            const auto& graded = graded_exterior_power(g, n);
            for (int j = 0; j <= 2 * g * n; ++j) {
                auto chi = graded.layer(j);
                Int rank = 0;
                for (const auto& [lam, m] : chi.coeffs) {
                    if (m <= 0) return "non-positive multiplicity";
                    if (lam.parts[0] > n)
                        return "support bound violated at g=" + std::to_string(g) +
                               " n=" + std::to_string(n);
                    if ((j - lam.size()) % 2 != 0)
                        return "parity violated at g=" + std::to_string(g) +
                               " j=" + std::to_string(j);
                    rank += m * weyl_dim(lam);
                }
                if (rank != binomial(2 * g * n, j))
                    return "rank identity failed at g=" + std::to_string(g) +
                           " n=" + std::to_string(n) + " j=" + std::to_string(j);
                if (!(chi == graded.layer(2 * g * n - j)))
                    return "layer symmetry failed at g=" + std::to_string(g) +
                           " n=" + std::to_string(n) + " j=" + std::to_string(j);
            }
        }
    return {};
}

std::string check_duality_g1() {
    for (int n = 1; n <= 10; ++n)
        if (!duality_check(cohomology_table_g1(n), ec_universal(1, n)))
            return "duality failed at n = " + std::to_string(n);
    return {};
}

std::string check_duality_g2() {
    auto tables = load_cohomology_fixtures(2);
    if (tables.size() != 7) return "expected 7 fixture tables";
    for (const auto& [n, table] : tables)
        if (!duality_check(table, ec_universal(2, n)))
            return "duality failed against the fixture table at n = " + std::to_string(n);
    return {};
}

std::string check_hilbert_series() {
    const int K = 40;
    for (int n = 0; n <= 6; ++n) {
        auto h = hilbert_series(n, K);
        auto q = lambda_moment_series(n, K);
        for (int i = 0; i <= K; ++i) {
            Rat conv = 0;
            if (i % 2 == 0)
                for (int j = 0; 2 * j <= i; ++j) conv += q.at(j) * Rat(odd_partitions(i / 2 - j));
            if (h.at(i) != conv)
                return "series identity failed at n = " + std::to_string(n) +
                       ", degree " + std::to_string(i);
        }
    }
    return {};
}

std::string check_asymptotics() {
    for (auto [g, nmax] : {std::pair{1, 9}, {2, 6}, {3, 5}})
        for (int n = 1; n <= nmax; ++n) {
            int agree = asymptotic_consistency(g, n);
            if (agree < g + 1)
                return "only " + std::to_string(agree) + " coefficients agree at g=" +
                       std::to_string(g) + " n=" + std::to_string(n);
        }
    return {};
}

std::string check_json_round_trip() {
    auto motives = {
        ec_universal(1, 10),
        ec_universal(2, 7),
        ec_a2(7, 7),
        Motive::zero(),
        Motive::symbol(MotiveSymbol::siegel3(3, 3, 7), 2, -5),
    };
    for (const auto& m : motives)
        if (motive_from_json(motive_to_json(m)) != m) return "motive round trip failed";
    auto t = cohomology_table_g1(5);
    if (!(table_from_json(table_to_json(t)) == t)) return "table round trip failed";
    for (const auto& r : mgf_terms(2, 3)) {
        auto back = report_from_json(report_to_json(r));
        if (back.quotient != r.quotient || back.remainder != r.remainder ||
            !(back.exact == r.exact))
            return "moment report round trip failed";
    }
    auto c = census_moments(5, 4);
    auto cback = census_from_json(census_to_json(c));
    if (cback.p != c.p || cback.moments != c.moments) return "census round trip failed";
    return {};
}

std::string check_census(long p) {
    auto rows = census_vs_formula(p, 10);
    auto report = census_moments(p, 0);
    if (report.weighted_class_count != Rat(p)) return "weighted class count is not p";
    for (const auto& row : rows)
        if (!row.match)
            return "census/formula mismatch at n = " + std::to_string(row.n) + ": " +
                   rat_to_string(row.census) + " vs " + rat_to_string(row.formula);
    return {};
}

std::vector<Check> registry() {
    std::vector<Check> checks;
    checks.push_back({"fixtures/local_systems_g1", [] { return check_local_system_fixtures(1, 6); }});
    checks.push_back({"fixtures/local_systems_g2", [] { return check_local_system_fixtures(2, 20); }});
    checks.push_back({"fixtures/local_systems_g3", [] { return check_local_system_fixtures(3, 44); }});
    checks.push_back({"fixtures/euler_g1", [] { return check_euler_fixtures(1); }});
    checks.push_back({"fixtures/euler_g2", [] { return check_euler_fixtures(2); }});
    checks.push_back({"fixtures/euler_g3", [] { return check_euler_fixtures(3); }});
    checks.push_back({"fixtures/cohomology_g1", check_cohomology_g1});
    checks.push_back({"fixtures/moments_g1", [] { return check_moment_fixtures(1); }});
    checks.push_back({"fixtures/moments_g2", [] { return check_moment_fixtures(2); }});
    checks.push_back({"fixtures/moments_g3", [] { return check_moment_fixtures(3); }});
    checks.push_back({"fixtures/modular_forms", check_modular_forms});
    checks.push_back({"invariants/multiplicities", check_multiplicity_properties});
    checks.push_back({"invariants/duality_g1", check_duality_g1});
    checks.push_back({"invariants/duality_g2", check_duality_g2});
    checks.push_back({"invariants/hilbert_series", check_hilbert_series});
    checks.push_back({"invariants/asymptotics", check_asymptotics});
    checks.push_back({"invariants/json_round_trip", check_json_round_trip});
    for (long p : {5L, 7L, 11L, 13L})
        checks.push_back({"census/p" + std::to_string(p), [p] { return check_census(p); }});
    return checks;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite) {
    if (suite != "all" && suite != "fixtures" && suite != "invariants" && suite != "census")
        throw ValidationError("unknown suite: " + suite);
    std::vector<CheckResult> results;
    for (const auto& check : registry()) {
        if (suite != "all" && check.id.rfind(suite + "/", 0) != 0) continue;
        CheckResult r;
        r.id = check.id;
        try {
            r.detail = check.run();
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    // registry order is already sorted by id within suites; make it canonical
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return results;
}

}  // namespace abvar
