#include "abvar/weights.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace abvar {

namespace {

std::string parts_str(int g, const std::array<int, kMaxRank>& v) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < g; ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

long dot(const WeightVector& a, const WeightVector& b) {
    long s = 0;
    for (int i = 0; i < kMaxRank; ++i) s += long(a.coords[i]) * b.coords[i];
    return s;
}

long norm2_shifted(const HighestWeight& w) {
    long s = 0;
    for (int i = 0; i < w.g; ++i) {
        long c = w.parts[i] + (w.g - i);
        s += c * c;
    }
    return s;
}

}  // namespace

bool HighestWeight::valid() const {
    if (g < 1 || g > kMaxRank) return false;
    for (int i = 0; i < g; ++i)
        if (parts[i] < 0) return false;
    for (int i = 0; i + 1 < g; ++i)
        if (parts[i] < parts[i + 1]) return false;
    for (int i = g; i < kMaxRank; ++i)
        if (parts[i] != 0) return false;
    return true;
}

void HighestWeight::validate() const {
    if (!valid())
        throw ValidationError("not a dominant weight for rank " + std::to_string(g) + ": " + str());
}

std::string HighestWeight::str() const { return parts_str(g, parts); }

std::string WeightVector::str() const { return parts_str(g, coords); }

HighestWeight WeightVector::dominant_rep() const {
    std::array<int, kMaxRank> a{};
    for (int i = 0; i < g; ++i) a[i] = std::abs(coords[i]);
    std::sort(a.begin(), a.begin() + g, std::greater<>());
    return HighestWeight(g, a);
}

bool WeightVector::is_dominant() const {
    for (int i = 0; i < g; ++i)
        if (coords[i] < 0) return false;
    for (int i = 0; i + 1 < g; ++i)
        if (coords[i] < coords[i + 1]) return false;
    return true;
}

const std::vector<WeightVector>& positive_roots(int g) {
    static std::vector<WeightVector> cache[kMaxRank + 1];
    static std::once_flag once;
    std::call_once(once, [] {
        for (int r = 1; r <= kMaxRank; ++r) {
            auto& v = cache[r];
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    WeightVector a(r, {});
                    a.coords[i] = 1;
                    a.coords[j] = -1;
                    v.push_back(a);
                    a.coords[j] = 1;
                    v.push_back(a);
                }
            for (int i = 0; i < r; ++i) {
                WeightVector a(r, {});
                a.coords[i] = 2;
                v.push_back(a);
            }
        }
    });
    return cache[g];
}

WeightVector weyl_rho(int g) {
    WeightVector r(g, {});
    for (int i = 0; i < g; ++i) r.coords[i] = g - i;
    return r;
}

std::vector<HighestWeight> dominant_weights_below(const HighestWeight& lambda) {
    lambda.validate();
    const int g = lambda.g;
    std::vector<HighestWeight> out;
    auto ok = [&](const HighestWeight& mu) {
        // lambda - mu must lie in the non-negative root cone:
        // partial sums >= 0, total difference even and >= 0
        int ps = 0;
        for (int i = 0; i + 1 < g; ++i) {
            ps += lambda.parts[i] - mu.parts[i];
            if (ps < 0) return false;
        }
        int total = lambda.size() - mu.size();
        return total >= 0 && total % 2 == 0;
    };
    for (int a = lambda.parts[0]; a >= 0; --a)
        for (int b = (g >= 2 ? std::min(a, lambda.parts[0]) : 0); b >= 0; --b)
            for (int c = (g >= 3 ? b : 0); c >= 0; --c) {
                HighestWeight mu(g, {a, g >= 2 ? b : 0, g >= 3 ? c : 0});
                if (ok(mu)) out.push_back(mu);
                if (g < 3) break;
            }
    // descending (size, lex): every weight strictly above mu in the dominance
    // order precedes mu
    std::sort(out.begin(), out.end(), [](const HighestWeight& x, const HighestWeight& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x > y;
    });
    return out;
}

const std::map<HighestWeight, Int>& dominant_multiplicities(const HighestWeight& lambda) {
    static std::map<HighestWeight, std::map<HighestWeight, Int>> memo;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    lambda.validate();

    const int g = lambda.g;
    const auto& roots = positive_roots(g);
    const WeightVector rho = weyl_rho(g);
    const long lam2 = norm2_shifted(lambda);
    const int bound = lambda.parts[0];

    std::map<HighestWeight, Int> m;
    m[lambda] = 1;
    auto doms = dominant_weights_below(lambda);
    for (const auto& w : doms) {
        if (w == lambda) continue;
        Int num = 0;
        for (const auto& alpha : roots) {
            WeightVector nu(g, w.parts);
            for (int k = 1;; ++k) {
                nu = nu + alpha;
                bool inside = true;
                for (int i = 0; i < g; ++i)
                    if (std::abs(nu.coords[i]) > bound) inside = false;
                if (!inside) break;
                auto it = m.find(nu.dominant_rep());
                if (it == m.end() || it->second == 0) continue;
                long ip = dot(nu, alpha);
                num += it->second * ip;
            }
        }
        long denom = lam2 - norm2_shifted(w);
        // strict for dominant w < lambda
        if (denom <= 0) throw Error("Freudenthal denominator not positive at " + w.str());
        Int val = 2 * num;
        if (val % denom != 0) throw Error("Freudenthal division failed at " + w.str());
        m[w] = val / denom;
    }
    return memo.emplace(lambda, std::move(m)).first->second;
}

std::vector<WeightVector> weyl_orbit(const HighestWeight& mu) {
    const int g = mu.g;
    std::set<WeightVector> orbit;
    std::array<int, kMaxRank> p = mu.parts;
    std::sort(p.begin(), p.begin() + g);
    do {
        // all sign patterns on nonzero coordinates
        int nz = 0;
        std::array<int, kMaxRank> idx{};
        for (int i = 0; i < g; ++i)
            if (p[i] != 0) idx[nz++] = i;
        for (int mask = 0; mask < (1 << nz); ++mask) {
            WeightVector w(g, {});
            for (int i = 0; i < g; ++i) w.coords[i] = p[i];
            for (int b = 0; b < nz; ++b)
                if (mask & (1 << b)) w.coords[idx[b]] = -w.coords[idx[b]];
            orbit.insert(w);
        }
    } while (std::next_permutation(p.begin(), p.begin() + g));
    return {orbit.begin(), orbit.end()};
}

const WeightMap& weight_multiplicities(const HighestWeight& lambda) {
    static std::map<HighestWeight, WeightMap> memo;
    static std::mutex mu;
    {
        std::scoped_lock lock(mu);
        if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    }
    const auto& dom = dominant_multiplicities(lambda);
    WeightMap full;
    for (const auto& [w, c] : dom) {
        if (c == 0) continue;
        for (const auto& v : weyl_orbit(w)) full[v] = c;
    }
    std::scoped_lock lock(mu);
    return memo.emplace(lambda, std::move(full)).first->second;
}

Int weyl_dim(const HighestWeight& lambda) {
    lambda.validate();
    const int g = lambda.g;
    WeightVector shifted(g, {});
    for (int i = 0; i < g; ++i) shifted.coords[i] = lambda.parts[i] + (g - i);
    const WeightVector rho = weyl_rho(g);
    Int num = 1, den = 1;
    for (const auto& alpha : positive_roots(g)) {
        num *= dot(shifted, alpha);
        den *= dot(rho, alpha);
    }
    if (num % den != 0) throw Error("Weyl dimension is not integral (bug)");
    return num / den;
}

}  // namespace abvar
