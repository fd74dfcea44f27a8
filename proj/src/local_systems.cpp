#include "abvar/local_systems.hpp"

#include <mutex>

#include "abvar/modforms.hpp"

namespace abvar {

namespace {

Motive L(int k, Int c = 1) { return Motive::lefschetz_power(k, std::move(c)); }

Motive S1(int k, Int c = 1) {
    return Motive::symbol(MotiveSymbol::elliptic(k), 0, std::move(c));
}

// S1[k] after the weight conventions: -L-1 at k = 2, zero for odd weight or
// zero-dimensional even weight; genuine symbols otherwise
Motive s1_normalized(int k) { return normalize(S1(k)); }

void require_dominant(int l1, int l2, int l3 = 0) {
    if (l1 < l2 || l2 < l3 || l3 < 0)
        throw ValidationError("weight parts must be weakly decreasing and non-negative");
}

}  // namespace

Motive ec_a1(int lambda) {
    if (lambda < 0) throw ValidationError("negative weight");
    if (lambda % 2 == 1) return Motive::zero();
    return normalize(S1(lambda + 2, -1) - Motive::unit());
}

Motive ec_extr_a2(int l1, int l2) {
    require_dominant(l1, l2);
    if ((l1 + l2) % 2 == 1) return Motive::zero();
    Int s_sum = dim_cusp_sl2(l1 + l2 + 4);
    Int s_diff = dim_cusp_sl2(l1 - l2 + 2);
    Motive out = s1_normalized(l1 - l2 + 2) * L(l2 + 1, -s_sum);
    out += Motive::lefschetz_power(0, s_diff);
    out -= L(l2 + 1, s_sum);
    if (l1 % 2 == 0)
        out += s1_normalized(l2 + 2) + Motive::unit();
    else
        out -= s1_normalized(l1 + 3);
    return normalize(out);
}

Motive ec_a2(int l1, int l2) {
    static std::map<std::pair<int, int>, Motive> memo;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(l1, l2);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    require_dominant(l1, l2);
    Motive val;
    if ((l1 + l2) % 2 == 0) {
        Motive sym = Motive::symbol(MotiveSymbol::siegel2(l1 - l2, l2 + 3), 0, -1);
        val = normalize(sym + ec_extr_a2(l1, l2));
    }
    return memo.emplace(key, std::move(val)).first->second;
}

Motive ec_a3(int l1, int l2, int l3) {
    static std::map<std::tuple<int, int, int>, Motive> memo;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    auto key = std::make_tuple(l1, l2, l3);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    require_dominant(l1, l2, l3);
    Motive val;
    if ((l1 + l2 + l3) % 2 == 0) {
        Motive sym = Motive::symbol(MotiveSymbol::siegel3(l1 - l2, l2 - l3, l3 + 4));
        // six-term rest, running through the genus-2 values; odd-weight
        // genus-2 inputs contribute zero on both the e_c and rest sides
        Motive rest;
        rest -= ec_a2(l1 + 1, l2 + 1);
        rest -= ec_extr_a2(l1 + 1, l2 + 1) * s1_normalized(l3 + 2);
        rest += ec_a2(l1 + 1, l3);
        rest += ec_extr_a2(l1 + 1, l3) * s1_normalized(l2 + 3);
        rest -= ec_a2(l2, l3);
        rest -= ec_extr_a2(l2, l3) * s1_normalized(l1 + 4);
        val = normalize(sym + rest);
    }
    return memo.emplace(key, std::move(val)).first->second;
}

std::map<int, Motive> h_degrees_a1(int lambda) {
    if (lambda < 0) throw ValidationError("negative weight");
    std::map<int, Motive> out;
    if (lambda % 2 == 1) return out;
    if (lambda == 0) {
        out[0] = Motive::unit();
        return out;
    }
    out[1] = normalize(S1(lambda + 2) + L(lambda + 1));
    return out;
}

}  // namespace abvar
