#pragma once

#include <vector>

#include "abvar/motive.hpp"

namespace abvar {

/// Automorphism-weighted point-count statistics over a prime field,
/// from direct enumeration of short Weierstrass curves.
struct CensusReport {
    long p = 0;
    Rat weighted_class_count;  // equals p
    std::vector<Rat> moments;  // index n = 0..max_n
};

/// Enumerate all (a, b) with 4a^3 + 27b^2 != 0 over F_p (p >= 5 prime),
/// count points with the quadratic character, and average the n-th powers
/// against the twist-orbit mass 1/(p(p-1)). Checks the Hasse bound on every
/// curve. Throws ValidationError for p < 5 or composite p.
CensusReport census_moments(long p, int max_n);

struct CensusComparison {
    long p = 0;
    int n = 0;
    Rat census;
    Rat formula;
    bool match = false;
};

/// Per-n comparison of the census against the cohomological moment formula.
std::vector<CensusComparison> census_vs_formula(long p, int max_n);

}  // namespace abvar
