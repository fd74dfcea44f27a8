#include "abvar/census.hpp"

#include <cmath>
#include <vector>

#include "abvar/moments.hpp"

namespace abvar {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

CensusReport census_moments(long p, int max_n) {
    if (p < 5 || !is_prime(p))
        throw ValidationError("census needs a prime p >= 5 (characteristics 2 and 3 excluded)");
    if (max_n < 0) throw ValidationError("negative moment order");

    // quadratic character chi, chi(0) = 0, via the set of squares
    std::vector<int> chi(size_t(p), -1);
    chi[0] = 0;
    for (long x = 1; x < p; ++x) chi[size_t(x * x % p)] = 1;

    std::vector<long> cube(static_cast<size_t>(p));
    for (long x = 0; x < p; ++x) cube[size_t(x)] = x * x % p * x % p;

    const double hasse = 2.0 * std::sqrt(double(p));
    std::vector<Int> power_sums(size_t(max_n) + 1, 0);
    for (long a = 0; a < p; ++a) {
        for (long b = 0; b < p; ++b) {
            long disc = (4 * cube[size_t(a)] + 27 * b * b % p) % p;
            if (disc == 0) continue;
            long count = p + 1;
            for (long x = 0; x < p; ++x)
                count += chi[size_t((cube[size_t(x)] + a * x + b) % p)];
            if (std::abs(double(count - p - 1)) > hasse)
                throw Error("point count outside the Hasse bound (bug)");
            Int pw = 1;
            for (int n = 0; n <= max_n; ++n) {
                power_sums[size_t(n)] += pw;
                pw *= count;
            }
        }
    }

    CensusReport r;
    r.p = p;
    const Int mass = Int(p) * (p - 1);
    // the (p-1)-fold twist-orbit overcount cancels the automorphism weights
    r.weighted_class_count = Rat(power_sums[0], p - 1);
    for (int n = 0; n <= max_n; ++n) r.moments.push_back(Rat(power_sums[size_t(n)], mass));
    return r;
}

std::vector<CensusComparison> census_vs_formula(long p, int max_n) {
    if (max_n > 10) throw ValidationError("census comparison covers n <= 10");
    CensusReport census = census_moments(p, max_n);
    std::vector<CensusComparison> out;
    for (int n = 0; n <= max_n; ++n) {
        CensusComparison c;
        c.p = p;
        c.n = n;
        c.census = census.moments[size_t(n)];
        c.formula = moment_at(1, n, p);
        c.match = (c.census == c.formula);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace abvar
