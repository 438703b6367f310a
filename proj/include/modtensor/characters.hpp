#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modtensor/alcoves.hpp"
#include "modtensor/rootdata.hpp"

namespace modtensor {

// Finitely supported Z-valued function on weights; zero entries are never stored.
// Tag distinguishes formal characters from expansions in the chi / simple bases.
template <class Tag>
class WeightSum {
public:
    using Map = std::map<Weight, std::int64_t, PeelOrder>;

    WeightSum() = default;
    WeightSum(std::initializer_list<std::pair<const Weight, std::int64_t>> init) {
        for (const auto& [w, m] : init) add(w, m);
    }

    void add(Weight w, std::int64_t m) {
        if (m == 0) return;
        auto [it, inserted] = terms_.try_emplace(w, m);
        if (!inserted && (it->second += m) == 0) terms_.erase(it);
    }

    std::int64_t operator[](Weight w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    // Highest label in the peel order.
    std::pair<Weight, std::int64_t> top() const { return *terms_.begin(); }

    WeightSum& operator+=(const WeightSum& o) { for (const auto& [w, m] : o) add(w, m); return *this; }
    WeightSum& operator-=(const WeightSum& o) { for (const auto& [w, m] : o) add(w, -m); return *this; }
    friend WeightSum operator+(WeightSum x, const WeightSum& y) { return x += y; }
    friend WeightSum operator-(WeightSum x, const WeightSum& y) { return x -= y; }

    void add_scaled(const WeightSum& o, std::int64_t k) { for (const auto& [w, m] : o) add(w, m * k); }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (const auto& [w, m] : terms_) s += m;
        return s;
    }
    std::int64_t max_coefficient() const {
        std::int64_t s = 0;
        for (const auto& [w, m] : terms_) s = std::max(s, m);
        return s;
    }
    bool all_nonnegative() const {
        for (const auto& [w, m] : terms_) if (m < 0) return false;
        return true;
    }

    // Ascending (a, b): the canonical serialization order.
    std::vector<std::pair<Weight, std::int64_t>> sorted() const {
        std::vector<std::pair<Weight, std::int64_t>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end());
        return v;
    }

    bool operator==(const WeightSum& o) const { return terms_ == o.terms_; }

private:
    Map terms_;
};

struct FormalTag {};
struct ChiTag {};
struct SimpleTag {};

using FormalCharacter = WeightSum<FormalTag>;
using ChiExpansion = WeightSum<ChiTag>;        // labels dominant, basis chi(lambda)
using SimpleExpansion = WeightSum<SimpleTag>;  // labels dominant, basis ch L(lambda)

inline std::int64_t dimension(const FormalCharacter& ch) { return ch.total(); }

inline FormalCharacter convolve(const FormalCharacter& x, const FormalCharacter& y) {
    std::unordered_map<Weight, std::int64_t, WeightHash> acc;
    acc.reserve(x.size() * 4 + y.size() * 4);
    for (const auto& [u, m] : x)
        for (const auto& [v, n] : y) acc[u + v] += m * n;
    FormalCharacter out;
    for (const auto& [w, m] : acc) out.add(w, m);
    return out;
}

inline bool is_weyl_invariant(const RootDatum& datum, const FormalCharacter& ch) {
    for (const auto& [w, m] : ch)
        for (const auto& [img, idx] : datum.finite_orbit(w))
            if (ch[img] != m) return false;
    return true;
}

// Dominant weights <= lambda (same coset of the root lattice), by increasing depth.
inline std::vector<Weight> dominant_weights_below(const RootDatum& datum, Weight lambda) {
    auto [rc, rd] = datum.root_coordinates(lambda);
    const long long cmax = detail::floor_rational(rc), dmax = detail::floor_rational(rd);
    const Weight r1 = datum.positive_roots()[0].root, r2 = datum.positive_roots()[1].root;
    std::vector<std::pair<long long, Weight>> found;
    for (long long c = 0; c <= cmax; ++c)
        for (long long d = 0; d <= dmax; ++d) {
            Weight mu = lambda - r1 * static_cast<int>(c) - r2 * static_cast<int>(d);
            if (mu.dominant()) found.emplace_back(c + d, mu);
        }
    std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Weight> out;
    for (const auto& f : found) out.push_back(f.second);
    return out;
}

// Dominant-weight multiplicities of the Weyl module by Freudenthal's recursion.
inline std::map<Weight, std::int64_t> freudenthal_dominant(const RootDatum& datum, Weight lambda) {
    if (!lambda.dominant()) throw DomainError("weyl_character needs a dominant weight, got " + lambda.str());
    std::map<Weight, std::int64_t> mult;
    const Weight rho = datum.rho();
    const long long top = datum.form(lambda + rho, lambda + rho);
    for (Weight mu : dominant_weights_below(datum, lambda)) {
        if (mu == lambda) { mult[mu] = 1; continue; }
        long long rhs = 0;
        for (const auto& root : datum.positive_roots()) {
            for (int k = 1;; ++k) {
                Weight x = mu + root.root * k;
                auto it = mult.find(datum.dominant_representative(x));
                if (it == mult.end()) break;
                rhs += it->second * datum.form(x, root.root);
            }
        }
        const long long denom = top - datum.form(mu + rho, mu + rho);
        if (denom <= 0 || (2 * rhs) % denom != 0) throw InvariantError("Freudenthal recursion not integral");
        if (rhs != 0) mult[mu] = 2 * rhs / denom;
    }
    return mult;
}

inline FormalCharacter weyl_character(const RootDatum& datum, Weight lambda) {
    FormalCharacter ch;
    for (const auto& [mu, m] : freudenthal_dominant(datum, lambda))
        for (const auto& [img, idx] : datum.finite_orbit(mu)) ch.add(img, m);
    return ch;
}

inline std::int64_t weyl_dimension(const RootDatum& datum, Weight lambda) {
    const std::int64_t a = lambda.a, b = lambda.b;
    if (datum.id() == RootSystemId::A2) return (a + 1) * (b + 1) * (a + b + 2) / 2;
    return (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) / 6;
}

struct SignedWeight {
    Weight weight;
    int sign;
};

// chi(w.mu) = (-1)^l(w) chi(mu); zero on the rho-shifted walls.
inline std::optional<SignedWeight> chi_normalize(const RootDatum& datum, Weight mu) {
    Weight y = mu + datum.rho();
    int sign = 1;
    while (y.a < 0 || y.b < 0) {
        y = datum.reflect(y, y.a < 0 ? 0 : 1);
        sign = -sign;
    }
    if (y.a == 0 || y.b == 0) return std::nullopt;
    return SignedWeight{y - datum.rho(), sign};
}

// sum_b E(b) sum_nu F(nu) chi(b + nu); F must be W-invariant.
inline ChiExpansion multiply_chi_expansion(const RootDatum& datum, const ChiExpansion& e, const FormalCharacter& f) {
    std::unordered_map<Weight, std::int64_t, WeightHash> acc;
    for (const auto& [b, coeff] : e) {
        for (const auto& [nu, m] : f) {
            auto n = chi_normalize(datum, b + nu);
            if (n) acc[n->weight] += coeff * m * n->sign;
        }
    }
    ChiExpansion out;
    for (const auto& [w, m] : acc) out.add(w, m);
    return out;
}

inline ChiExpansion multiply_by_chi(const RootDatum& datum, const FormalCharacter& ch, Weight lambda) {
    if (!lambda.dominant()) throw DomainError("multiply_by_chi needs a dominant weight");
    return multiply_chi_expansion(datum, ChiExpansion{{lambda, 1}}, ch);
}

inline FormalCharacter chi_to_formal(const RootDatum& datum, const ChiExpansion& e) {
    FormalCharacter out;
    for (const auto& [b, c] : e) out.add_scaled(weyl_character(datum, b), c);
    return out;
}

inline ChiExpansion peel_to_chi(const RootDatum& datum, FormalCharacter ch) {
    if (!is_weyl_invariant(datum, ch)) throw InvariantError("peel_to_chi: character is not W-invariant");
    ChiExpansion out;
    while (!ch.empty()) {
        auto [top, c] = ch.top();
        if (!top.dominant()) throw InvariantError("peel_to_chi: highest weight is not dominant");
        out.add(top, c);
        ch.add_scaled(weyl_character(datum, top), -c);
    }
    return out;
}

struct CavallinReduction {
    Weight mu;
    Weight nu;
};

// dim Delta(mu)_nu = dim Delta(mu~)_nu~ with a~ = min(a', c), b~ = min(b', d).
inline CavallinReduction cavallin_reduce_b2(Weight mu, Weight nu) {
    const RootDatum& b2 = RootDatum::get(RootSystemId::B2);
    if (!mu.dominant()) throw DomainError("cavallin_reduce_b2 needs a dominant highest weight");
    long long c = 0, d = 0;
    if (!b2.root_lattice_coordinates(mu - nu, c, d) || c < 0 || d < 0)
        throw DomainError("cavallin_reduce_b2: " + nu.str() + " is not below " + mu.str());
    Weight reduced{static_cast<int>(std::min<long long>(mu.a, c)), static_cast<int>(std::min<long long>(mu.b, d))};
    return {reduced, nu - (mu - reduced)};
}

}  // namespace modtensor
