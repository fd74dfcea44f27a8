#include "abvar/kunneth.hpp"

#include <iostream>
#include <mutex>

#include "abvar/local_systems.hpp"

namespace abvar {

namespace {

void check_rank(int g) {
    if (g < 1 || g > kMaxRank) throw ValidationError("rank out of range");
}

// one graded multiplication step by the exterior algebra E = sum_j wedge^j t^j
GradedCharacter graded_step(const GradedCharacter& prev) {
    const int g = prev.g;
    GradedCharacter next;
    next.g = g;
    next.n = prev.n + 1;
    for (int j2 = 0; j2 <= 2 * g; ++j2) {
        const VirtualCharacter ext = exterior_standard(g, j2);
        for (const auto& [j1, chi] : prev.layers) {
            VirtualCharacter prod(g);
            for (const auto& [lam, c] : chi.coeffs) {
                for (const auto& [mu, cm] : ext.coeffs) {
                    VirtualCharacter t = tensor(VirtualCharacter::irreducible(lam),
                                                VirtualCharacter::irreducible(mu));
                    t *= c * cm;
                    prod += t;
                }
            }
            if (prod.is_zero()) continue;
            auto [it, fresh] = next.layers.try_emplace(j1 + j2, prod);
            if (!fresh) it->second += prod;
        }
    }
    std::erase_if(next.layers, [](const auto& kv) { return kv.second.is_zero(); });
    return next;
}

}  // namespace

const GradedCharacter& graded_exterior_power(int g, int n) {
    check_rank(g);
    if (n < 0) throw ValidationError("negative fiber power");
    static std::map<std::pair<int, int>, GradedCharacter> memo;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(g, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // build upwards from the trivial grading
    GradedCharacter base;
    base.g = g;
    base.n = 0;
    base.layers[0] = VirtualCharacter::one(g);
    const GradedCharacter* cur = &memo.try_emplace({g, 0}, std::move(base)).first->second;
    for (int k = 1; k <= n; ++k) {
        auto found = memo.find({g, k});
        if (found == memo.end())
            found = memo.emplace(std::make_pair(g, k), graded_step(*cur)).first;
        cur = &found->second;
    }
    return *cur;
}

Int multiplicity(int g, int n, int j, const HighestWeight& lambda) {
    check_rank(g);
    lambda.validate();
    if (lambda.g != g) throw ValidationError("weight rank does not match g");
    if (n < 0 || j < 0 || j > 2 * g * n) throw ValidationError("indices out of range");
    return graded_exterior_power(g, n).layer(j).coeff(lambda);
}

LaurentPoly f_poly(int g, int n, const HighestWeight& lambda) {
    check_rank(g);
    lambda.validate();
    const auto& graded = graded_exterior_power(g, n);
    LaurentPoly f;
    const int size = lambda.size();
    for (const auto& [j, chi] : graded.layers) {
        Int m = chi.coeff(lambda);
        if (m == 0) continue;
        if ((j - size) % 2 != 0)
            throw Error("parity violation in twist polynomial at layer " + std::to_string(j));
        f.add((j - size) / 2, j % 2 ? -m : m);
    }
    return f;
}

Motive ec_universal(int g, int n) {
    check_rank(g);
    if (n < 0) throw ValidationError("negative fiber power");
    static const int validated[kMaxRank + 1] = {0, 10, 7, 6};
    if (n > validated[g])
        std::cerr << "warning: fiber power " << n << " for g=" << g
                  << " is outside the validated range; symbol dimensions may be unknown\n";
    const auto& graded = graded_exterior_power(g, n);
    // collect the support of all layers
    std::map<HighestWeight, LaurentPoly> twists;
    for (const auto& [j, chi] : graded.layers)
        for (const auto& [lam, m] : chi.coeffs) {
            if (m == 0) continue;
            if ((j - lam.size()) % 2 != 0)
                throw Error("parity violation in layer " + std::to_string(j));
            twists[lam].add((j - lam.size()) / 2, j % 2 ? -m : m);
        }
    Motive total;
    for (const auto& [lam, f] : twists) {
        if (lam.parity() == 1) continue;  // odd local systems have no cohomology
        Motive ec;
        switch (g) {
            case 1: ec = ec_a1(lam.parts[0]); break;
            case 2: ec = ec_a2(lam.parts[0], lam.parts[1]); break;
            default: ec = ec_a3(lam.parts[0], lam.parts[1], lam.parts[2]); break;
        }
        if (ec.is_zero()) continue;
        total += f.as_motive() * ec;
    }
    return normalize(total);
}

CohomologyTable cohomology_table_g1(int n) {
    if (n < 1 || n > 10) throw ValidationError("genus-1 tables cover 1 <= n <= 10");
    const auto& graded = graded_exterior_power(1, n);
    CohomologyTable t;
    t.g = 1;
    t.n = n;
    for (const auto& [j, chi] : graded.layers) {
        for (const auto& [lam, m] : chi.coeffs) {
            const int size = lam.parts[0];
            for (const auto& [deg, h] : h_degrees_a1(size)) {
                // twist by L^((j - |lambda|)/2) into total degree j + deg
                Motive tw = h * Motive::lefschetz_power((j - size) / 2, m);
                auto [it, fresh] = t.rows.try_emplace(j + deg, tw);
                if (!fresh) it->second += tw;
            }
        }
    }
    std::erase_if(t.rows, [](const auto& kv) { return kv.second.is_zero(); });
    return t;
}

bool duality_check(const CohomologyTable& table, const Motive& ec) {
    const int d = fiber_power_dim(table.g, table.n);
    Motive alt;
    for (const auto& [i, h] : table.rows) {
        if (i % 2 == 0)
            alt += h;
        else
            alt -= h;
    }
    return dual(alt, d) == ec;
}

}  // namespace abvar
