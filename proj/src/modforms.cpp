#include "abvar/modforms.hpp"

#include <map>
#include <mutex>

namespace abvar {

const Int& QExpansion::at(int n) const {
    if (n < 0 || n > order()) throw ValidationError("q-expansion coefficient out of range");
    return coeffs[size_t(n)];
}

QExpansion QExpansion::truncated(int N) const {
    QExpansion r;
    r.weight = weight;
    r.coeffs.assign(coeffs.begin(), coeffs.begin() + std::min(size_t(N) + 1, coeffs.size()));
    r.coeffs.resize(size_t(N) + 1);
    return r;
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
    int N = std::min(a.order(), b.order());
    QExpansion r;
    r.weight = a.weight + b.weight;
    r.coeffs.assign(size_t(N) + 1, 0);
    for (int i = 0; i <= N; ++i) {
        if (a.coeffs[size_t(i)] == 0) continue;
        for (int j = 0; i + j <= N; ++j)
            r.coeffs[size_t(i + j)] += a.coeffs[size_t(i)] * b.coeffs[size_t(j)];
    }
    return r;
}

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
    int N = std::min(a.order(), b.order());
    QExpansion r;
    r.weight = a.weight;
    r.coeffs.assign(size_t(N) + 1, 0);
    for (int i = 0; i <= N; ++i) r.coeffs[size_t(i)] = a.coeffs[size_t(i)] + b.coeffs[size_t(i)];
    return r;
}

QExpansion operator-(const QExpansion& a, const QExpansion& b) {
    int N = std::min(a.order(), b.order());
    QExpansion r;
    r.weight = a.weight;
    r.coeffs.assign(size_t(N) + 1, 0);
    for (int i = 0; i <= N; ++i) r.coeffs[size_t(i)] = a.coeffs[size_t(i)] - b.coeffs[size_t(i)];
    return r;
}

namespace {

// sigma_k(n) for n = 1..N by sieve
std::vector<Int> divisor_sums(int k, int N) {
    std::vector<Int> s(size_t(N) + 1, 0);
    for (int d = 1; d <= N; ++d) {
        Int dk = int_pow(d, unsigned(k));
        for (int n = d; n <= N; n += d) s[size_t(n)] += dk;
    }
    return s;
}

QExpansion eisenstein(int k, Int constant_factor, int N) {
    QExpansion r;
    r.weight = k;
    r.coeffs.assign(size_t(N) + 1, 0);
    r.coeffs[0] = 1;
    auto s = divisor_sums(k - 1, N);
    for (int n = 1; n <= N; ++n) r.coeffs[size_t(n)] = constant_factor * s[size_t(n)];
    return r;
}

QExpansion eta24(int N) {
    // q * prod_{n>=1} (1 - q^n)^24
    std::vector<Int> prod(size_t(N), 0);  // coefficients of prod (1-q^n)^24 to order N-1
    prod[0] = 1;
    for (int n = 1; n < N; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int i = N - 1 - n; i >= 0; --i)
                prod[size_t(i + n)] -= prod[size_t(i)];
        }
    }
    QExpansion r;
    r.weight = 12;
    r.coeffs.assign(size_t(N) + 1, 0);
    for (int i = 0; i + 1 <= N; ++i) r.coeffs[size_t(i + 1)] = prod[size_t(i)];
    return r;
}

const QExpansion& cached(Series s, int N) {
    static std::map<std::pair<Series, int>, QExpansion> memo;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(s, N);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    QExpansion r;
    switch (s) {
        case Series::E4: r = eisenstein(4, 240, N); break;
        case Series::E6: r = eisenstein(6, -504, N); break;
        case Series::Delta: r = eta24(N); break;
        case Series::F18: r = eta24(N) * eisenstein(6, -504, N); break;
    }
    return memo.emplace(key, std::move(r)).first->second;
}

}  // namespace

QExpansion qexp(Series s, int N) {
    if (N < 1) throw ValidationError("q-expansion order must be >= 1");
    return cached(s, N);
}

QExpansion delta_by_eisenstein(int N) {
    auto e4 = qexp(Series::E4, N);
    auto e6 = qexp(Series::E6, N);
    QExpansion num = e4 * e4 * e4 - e6 * e6;
    QExpansion r;
    r.weight = 12;
    r.coeffs.assign(size_t(N) + 1, 0);
    for (int n = 0; n <= N; ++n) {
        if (num.coeffs[size_t(n)] % 1728 != 0)
            throw Error("E4^3 - E6^2 not divisible by 1728 (bug)");
        r.coeffs[size_t(n)] = num.coeffs[size_t(n)] / 1728;
    }
    return r;
}

int dim_cusp_sl2(int k) {
    if (k == 2) return -1;  // convention
    if (k <= 0 || k % 2 != 0) return 0;
    int d = k / 12;
    if (k % 12 == 2) d -= 1;
    return d;
}

Int hecke_ap(int k, const Int& p) {
    // one-dimensional spaces only: S_k = Delta * E4^a * E6^b with a unique
    // monomial of weight k - 12
    if (dim_cusp_sl2(k) != 1)
        throw ValidationError("weight " + std::to_string(k) +
                              " does not have a one-dimensional cusp space");
    int pn = static_cast<int>(p);
    QExpansion f = qexp(Series::Delta, pn);
    switch (k) {
        case 12: break;
        case 16: f = f * qexp(Series::E4, pn); break;
        case 18: f = f * qexp(Series::E6, pn); break;
        case 20: f = f * qexp(Series::E4, pn) * qexp(Series::E4, pn); break;
        case 22: f = f * qexp(Series::E4, pn) * qexp(Series::E6, pn); break;
        case 26:
            f = f * qexp(Series::E4, pn) * qexp(Series::E4, pn) * qexp(Series::E6, pn);
            break;
        default: throw ValidationError("unexpected one-dimensional weight");
    }
    // monomials in E4, E6 have constant term 1, so a_1 = 1 already
    return f.at(pn);
}

Int frob_trace_power(const Int& ap, int k, const Int& p, int r) {
    if (r < 0) throw ValidationError("negative Frobenius power");
    Int t0 = 2, t1 = ap;
    if (r == 0) return t0;
    Int pk = int_pow(p, unsigned(k - 1));
    for (int i = 2; i <= r; ++i) {
        Int t2 = ap * t1 - pk * t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

}  // namespace abvar
