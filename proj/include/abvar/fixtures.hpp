#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "abvar/kunneth.hpp"
#include "abvar/moments.hpp"
#include "abvar/motive.hpp"

namespace abvar {

/// One frozen local-system value with its literature provenance.
struct LocalSystemFixture {
    std::vector<int> lambda;
    Motive motive;  // as printed in the source table (normalized on use)
    std::string source;
};

struct FixtureTable {
    int g = 1;
    std::vector<LocalSystemFixture> entries;
};

struct MomentFixture {
    int n = 0;
    Poly quotient;
    Poly remainder;
};

struct MomentFixtureSet {
    int g = 1;
    Poly denominator;
    std::vector<MomentFixture> entries;
};

/// Fixture directory: ABVAR_FIXTURES environment variable if set, else the
/// data directory recorded at build time.
std::filesystem::path fixture_dir();

FixtureTable load_local_system_fixtures(int g);
std::map<int, Motive> load_euler_fixtures(int g);
std::map<int, CohomologyTable> load_cohomology_fixtures(int g);
MomentFixtureSet load_moment_fixtures(int g);

}  // namespace abvar
