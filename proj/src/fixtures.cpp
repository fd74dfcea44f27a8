#include "abvar/fixtures.hpp"

#include <cstdlib>
#include <fstream>

#include "abvar/emit.hpp"

namespace abvar {

namespace {

json load_json(const std::string& name) {
    auto path = fixture_dir() / name;
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture file " + path.string());
    json j;
    in >> j;
    return j;
}

void check_g(int g) {
    if (g < 1 || g > 3) throw ValidationError("g must be 1, 2 or 3");
}

}  // namespace

std::filesystem::path fixture_dir() {
    if (const char* env = std::getenv("ABVAR_FIXTURES"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(ABVAR_DEFAULT_DATA_DIR);
}

FixtureTable load_local_system_fixtures(int g) {
    check_g(g);
    json j = load_json("local_systems_a" + std::to_string(g) + ".json");
    FixtureTable t;
    t.g = j.at("g").get<int>();
    for (const auto& e : j.at("entries")) {
        LocalSystemFixture f;
        f.lambda = e.at("lambda").get<std::vector<int>>();
        f.motive = motive_from_json(e.at("motive"));
        f.source = e.at("source").get<std::string>();
        t.entries.push_back(std::move(f));
    }
    return t;
}

std::map<int, Motive> load_euler_fixtures(int g) {
    check_g(g);
    json j = load_json("euler_g" + std::to_string(g) + ".json");
    std::map<int, Motive> out;
    for (const auto& e : j.at("entries"))
        out.emplace(e.at("n").get<int>(), motive_from_json(e.at("motive")));
    return out;
}

std::map<int, CohomologyTable> load_cohomology_fixtures(int g) {
    check_g(g);
    json j = load_json("cohomology_g" + std::to_string(g) + ".json");
    std::map<int, CohomologyTable> out;
    for (const auto& e : j.at("tables")) {
        CohomologyTable t;
        t.g = g;
        t.n = e.at("n").get<int>();
        for (const auto& row : e.at("rows")) {
            Motive h = motive_from_json(row.at("h"));
            if (!h.is_zero()) t.rows.emplace(row.at("i").get<int>(), std::move(h));
        }
        out.emplace(t.n, std::move(t));
    }
    return out;
}

MomentFixtureSet load_moment_fixtures(int g) {
    check_g(g);
    json j = load_json("moments_g" + std::to_string(g) + ".json");
    MomentFixtureSet s;
    s.g = j.at("g").get<int>();
    s.denominator = poly_from_json(j.at("denominator"));
    for (const auto& e : j.at("entries")) {
        MomentFixture f;
        f.n = e.at("n").get<int>();
        f.quotient = poly_from_json(e.at("quotient"));
        f.remainder = poly_from_json(e.at("remainder"));
        s.entries.push_back(std::move(f));
    }
    return s;
}

}  // namespace abvar
