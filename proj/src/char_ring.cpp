#include "abvar/char_ring.hpp"

#include <bit>
#include <mutex>
#include <sstream>

namespace abvar {

VirtualCharacter VirtualCharacter::irreducible(const HighestWeight& lambda, Int c) {
    lambda.validate();
    VirtualCharacter v(lambda.g);
    if (c != 0) v.coeffs.emplace(lambda, std::move(c));
    return v;
}

Int VirtualCharacter::coeff(const HighestWeight& lambda) const {
    auto it = coeffs.find(lambda);
    return it == coeffs.end() ? Int(0) : it->second;
}

Int VirtualCharacter::dim() const {
    Int d = 0;
    for (const auto& [w, c] : coeffs) d += c * weyl_dim(w);
    return d;
}

VirtualCharacter& VirtualCharacter::add(const HighestWeight& lambda, const Int& c) {
    if (lambda.g != g) throw ValidationError("rank mismatch in character sum");
    auto [it, fresh] = coeffs.try_emplace(lambda, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    } else if (it->second == 0) {
        coeffs.erase(it);
    }
    return *this;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
    if (o.g != g) throw ValidationError("rank mismatch in character sum");
    for (const auto& [w, c] : o.coeffs) add(w, c);
    return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
    if (o.g != g) throw ValidationError("rank mismatch in character sum");
    for (const auto& [w, c] : o.coeffs) add(w, -c);
    return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(const Int& c) {
    if (c == 0) {
        coeffs.clear();
        return *this;
    }
    for (auto& [w, v] : coeffs) v *= c;
    return *this;
}

std::string VirtualCharacter::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : coeffs) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1) os << a << "*";
        os << "V" << w.str();
        first = false;
    }
    return os.str();
}

WeightMap weights_of(const VirtualCharacter& v) {
    WeightMap out;
    for (const auto& [lam, c] : v.coeffs) {
        for (const auto& [w, m] : weight_multiplicities(lam)) {
            Int& slot = out[w];
            slot += c * m;
            if (slot == 0) out.erase(w);
        }
    }
    return out;
}

WeightMap convolve(const WeightMap& a, const WeightMap& b) {
    WeightMap out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            WeightVector w = wa + wb;
            Int& slot = out[w];
            slot += ca * cb;
            if (slot == 0) out.erase(w);
        }
    return out;
}

VirtualCharacter decompose_weights(int g, const WeightMap& w) {
    for (const auto& [v, c] : w)
        if (v.g != g) throw ValidationError("weight of wrong rank: " + v.str());
    // peel from the lexicographically largest weight downwards
    std::map<WeightVector, Int, std::greater<>> work(w.begin(), w.end());
    VirtualCharacter out(g);
    while (!work.empty()) {
        const auto& [top, c] = *work.begin();
        if (!top.is_dominant())
            throw ValidationError("weight system is not Weyl-symmetric: stray weight " +
                                  top.str());
        HighestWeight lam(g, {});
        for (int i = 0; i < g; ++i) lam.parts[i] = top.coords[i];
        Int mult = c;
        for (const auto& [v, m] : weight_multiplicities(lam)) {
            auto [it, fresh] = work.try_emplace(v, 0);
            it->second -= mult * m;
            if (it->second == 0) work.erase(it);
        }
        out.add(lam, mult);
    }
    return out;
}

namespace {

VirtualCharacter tensor_irreducible(const HighestWeight& a, const HighestWeight& b) {
    static std::map<std::pair<HighestWeight, HighestWeight>, VirtualCharacter> memo;
    static std::mutex mu;
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    {
        std::scoped_lock lock(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    auto prod = decompose_weights(
        a.g, convolve(weight_multiplicities(key.first), weight_multiplicities(key.second)));
    std::scoped_lock lock(mu);
    return memo.emplace(key, std::move(prod)).first->second;
}

}  // namespace

VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b) {
    if (a.g != b.g) throw ValidationError("rank mismatch in tensor product");
    VirtualCharacter out(a.g);
    for (const auto& [wa, ca] : a.coeffs)
        for (const auto& [wb, cb] : b.coeffs) {
            VirtualCharacter p = tensor_irreducible(wa, wb);
            p *= ca * cb;
            out += p;
        }
    return out;
}

VirtualCharacter exterior_standard(int g, int j) {
    if (g < 1 || g > kMaxRank) throw ValidationError("rank out of range");
    if (j < 0 || j > 2 * g)
        throw ValidationError("exterior power degree out of range: " + std::to_string(j));
    // weights of the standard representation are +-e_i; the j-th exterior
    // power picks j distinct ones
    WeightMap sums;
    const int m = 2 * g;
    for (int mask = 0; mask < (1 << m); ++mask) {
        if (std::popcount(unsigned(mask)) != j) continue;
        WeightVector w(g, {});
        for (int t = 0; t < m; ++t)
            if (mask & (1 << t)) w.coords[t / 2] += (t % 2 ? -1 : 1);
        sums[w] += 1;
    }
    return decompose_weights(g, sums);
}

Rat evaluate(const VirtualCharacter& v, std::span<const Int> point) {
    if (static_cast<int>(point.size()) != v.g)
        throw ValidationError("torus point has wrong rank");
    Rat total = 0;
    for (const auto& [lam, c] : v.coeffs) {
        Rat chi = 0;
        for (const auto& [w, m] : weight_multiplicities(lam)) {
            Rat term = Rat(m);
            for (int i = 0; i < v.g; ++i) term *= rat_pow(point[i], w.coords[i]);
            chi += term;
        }
        total += Rat(c) * chi;
    }
    return total;
}

}  // namespace abvar
