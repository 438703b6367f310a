#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "modtensor/alcoves.hpp"
#include "modtensor/characters.hpp"

namespace modtensor {

struct CompositionFactor {
    Weight weight;
    int multiplicity = 1;
    bool operator==(const CompositionFactor&) const = default;
};

using CompositionSeries = std::vector<CompositionFactor>;

// Digits lambda_0, ..., lambda_m with lambda = sum p^i lambda_i.
using BasePExpansion = std::vector<Weight>;

inline BasePExpansion base_p_expand(int p, Weight lambda) {
    check_prime(p);
    if (!lambda.dominant()) throw DomainError("base_p_expand needs a dominant weight, got " + lambda.str());
    BasePExpansion digits;
    do {
        digits.push_back({lambda.a % p, lambda.b % p});
        lambda = {lambda.a / p, lambda.b / p};
    } while (!lambda.is_zero());
    return digits;
}

inline Weight base_p_reconstruct(int p, const BasePExpansion& digits) {
    Weight out;
    int scale = 1;
    for (Weight d : digits) { out += d * scale; scale *= p; }
    return out;
}

inline FormalCharacter frobenius_twist(const FormalCharacter& ch, int r, int p) {
    int scale = 1;
    for (int i = 0; i < r; ++i) scale *= p;
    FormalCharacter out;
    for (const auto& [w, m] : ch) out.add(w * scale, m);
    return out;
}

namespace detail {

// The weight in C-bar_0 linked to lambda sits only on the wall H_{alpha_hs,1}.
inline bool stabiliser_is_s(const RootDatum& datum, int p, Weight lambda) {
    Weight nu = dominant_fold(datum, p, lambda).point;
    const Weight y = nu + datum.rho();
    return datum.pair(y, datum.highest_short_root()) == p && datum.pair(y, 0) > 0 && datum.pair(y, 1) > 0;
}

}  // namespace detail

// Composition factors of the Weyl module of a restricted highest weight.
inline CompositionSeries weyl_factors_restricted(const RootDatum& datum, int p, Weight lambda) {
    check_prime(p);
    if (!lambda.restricted(p)) throw DomainError(lambda.str() + " is not " + std::to_string(p) + "-restricted");
    CompositionSeries series{{lambda, 1}};
    auto below = [&](std::size_t root, int level) {
        series.push_back({dot_reflect(datum, p, {root, level}, lambda), 1});
    };
    const bool regular = is_p_regular(datum, p, lambda);
    const std::size_t hs = datum.highest_short_root();
    if (datum.id() == RootSystemId::A2) {
        if (regular && in_named_alcove(datum, p, "C1", lambda)) below(datum.highest_root(), 1);
        return series;
    }
    if (p == 2) {
        if (lambda == Weight{1, 0}) series.push_back({{0, 0}, 1});
        return series;
    }
    if (p == 3) {
        if (lambda == Weight{1, 2}) series.push_back({{0, 2}, 1});
        return series;
    }
    if (regular) {
        if (in_named_alcove(datum, p, "C1", lambda)) below(hs, 1);
        else if (in_named_alcove(datum, p, "C2", lambda)) below(datum.highest_root(), 1);
        else if (in_named_alcove(datum, p, "C3", lambda)) below(hs, 2);
        return series;
    }
    const bool on_f34b_only = in_named_upper_closure(datum, p, "C3", lambda) && lambda.a != p - 1;
    if (on_f34b_only && detail::stabiliser_is_s(datum, p, lambda)) below(hs, 2);
    return series;
}

// Memoised simple characters for one (system, p). Entries are written once;
// racing writers compute identical values, the first insert wins.
class CharacterTable {
public:
    CharacterTable(const RootDatum& datum, int p) : datum_(&datum), p_(p) { check_prime(p); }

    const RootDatum& datum() const { return *datum_; }
    int p() const { return p_; }

    const FormalCharacter& weyl(Weight lambda) {
        if (auto* hit = find(weyl_, lambda)) return *hit;
        return insert(weyl_, lambda, weyl_character(*datum_, lambda));
    }

    // ch L(lambda) in the chi basis, any dominant lambda.
    const ChiExpansion& simple_chi(Weight lambda) {
        if (auto* hit = find(chi_, lambda)) return *hit;
        ChiExpansion e;
        if (lambda.restricted(p_)) {
            e.add(lambda, 1);
            for (const auto& f : weyl_factors_restricted(*datum_, p_, lambda)) {
                if (f.weight == lambda) continue;
                if (!f.weight.restricted(p_)) throw InvariantError("non-restricted factor in restricted Weyl module");
                e.add_scaled(simple_chi(f.weight), -f.multiplicity);
            }
        } else {
            auto [low, high] = split(lambda);
            e = multiply_chi_expansion(*datum_, simple_chi(low), frobenius_twist(simple(high), 1, p_));
        }
        return insert(chi_, lambda, std::move(e));
    }

    // ch L(lambda) as a formal character, any dominant lambda.
    const FormalCharacter& simple(Weight lambda) {
        if (auto* hit = find(formal_, lambda)) return *hit;
        FormalCharacter ch;
        if (lambda.restricted(p_)) {
            for (const auto& [b, c] : simple_chi(lambda)) ch.add_scaled(weyl(b), c);
            if (!ch.all_nonnegative()) throw InvariantError("negative multiplicity in simple character");
        } else {
            auto [low, high] = split(lambda);
            ch = convolve(simple(low), frobenius_twist(simple(high), 1, p_));
        }
        return insert(formal_, lambda, std::move(ch));
    }

    std::int64_t simple_dimension(Weight lambda) { return dimension(simple(lambda)); }

    // Restricted simple characters held in memory (for persistence).
    std::map<Weight, FormalCharacter> restricted_snapshot() const {
        std::shared_lock lock(mutex_);
        std::map<Weight, FormalCharacter> out;
        for (const auto& [w, ch] : formal_)
            if (w.restricted(p_)) out.emplace(w, ch);
        return out;
    }

    void preload_simple(Weight lambda, FormalCharacter ch) { insert(formal_, lambda, std::move(ch)); }

    void warm_restricted() {
        for (int a = 0; a < p_; ++a)
            for (int b = 0; b < p_; ++b) { simple({a, b}); simple_chi({a, b}); }
    }

private:
    std::pair<Weight, Weight> split(Weight lambda) const {
        Weight low{lambda.a % p_, lambda.b % p_};
        return {low, Weight{lambda.a / p_, lambda.b / p_}};
    }

    template <class T>
    const T* find(const std::map<Weight, T>& m, Weight w) const {
        std::shared_lock lock(mutex_);
        auto it = m.find(w);
        return it == m.end() ? nullptr : &it->second;
    }

    template <class T>
    const T& insert(std::map<Weight, T>& m, Weight w, T value) {
        std::unique_lock lock(mutex_);
        return m.try_emplace(w, std::move(value)).first->second;
    }

    const RootDatum* datum_;
    int p_;
    mutable std::shared_mutex mutex_;
    std::map<Weight, FormalCharacter> weyl_;
    std::map<Weight, ChiExpansion> chi_;
    std::map<Weight, FormalCharacter> formal_;
};

inline FormalCharacter simple_character_restricted(const RootDatum& datum, int p, Weight lambda) {
    if (!lambda.restricted(p)) throw DomainError(lambda.str() + " is not " + std::to_string(p) + "-restricted");
    CharacterTable table(datum, p);
    return table.simple(lambda);
}

inline FormalCharacter simple_character(const RootDatum& datum, int p, Weight lambda) {
    if (!lambda.dominant()) throw DomainError("simple_character needs a dominant weight");
    FormalCharacter out{{Weight{0, 0}, 1}};
    CharacterTable table(datum, p);
    const auto digits = base_p_expand(p, lambda);
    for (std::size_t i = 0; i < digits.size(); ++i)
        out = convolve(out, frobenius_twist(table.simple(digits[i]), static_cast<int>(i), p));
    return out;
}

namespace detail {

inline Weight apply_word(const RootDatum& datum, int p, std::string_view word, Weight x) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (*it) {
            case 's': x = dot_reflect(datum, p, {datum.highest_short_root(), 1}, x); break;
            case 't': x = dot_reflect(datum, p, {0, 0}, x); break;
            case 'u': x = dot_reflect(datum, p, {1, 0}, x); break;
            default: break;
        }
    }
    return x;
}

}  // namespace detail

// Tilting characters in the range where the structure is tabulated; throws
// UnsupportedError elsewhere.
inline FormalCharacter tilting_character_labeled(const RootDatum& datum, int p, Weight lambda) {
    check_prime(p);
    if (!lambda.dominant()) throw DomainError("tilting character needs a dominant weight");
    CharacterTable table(datum, p);
    if (in_closure(datum, p, fundamental_alcove(datum), lambda)) return table.simple(lambda);

    const bool a2 = datum.id() == RootSystemId::A2;
    const bool regular = is_p_regular(datum, p, lambda);
    if (!regular) {
        if (a2 && p >= 2 && lambda.restricted(p)) return table.simple(lambda);
        if (!a2 && p >= 5) {
            const Weight y = lambda + datum.rho();
            const bool f12 = in_named_upper_closure(datum, p, "C1", lambda) && datum.pair(y, datum.highest_root()) == p;
            const bool c2_boundary = in_named_upper_closure(datum, p, "C2", lambda);
            if (f12 || c2_boundary) return table.simple(lambda);
        }
        throw UnsupportedError("no tilting data for singular weight " + lambda.str());
    }

    struct Diagram { std::string_view alcove; std::vector<std::string_view> labels; };
    std::vector<Diagram> diagrams;
    if (a2 && p >= 3) {
        diagrams = {{"s", {"e", "s", "e"}}, {"st", {"s", "st", "e", "s"}}, {"su", {"s", "su", "e", "s"}}};
    } else if (!a2 && p >= 5) {
        diagrams = {{"s", {"e", "s", "e"}}, {"st", {"s", "st", "e", "s"}}, {"stu", {"st", "stu", "s", "st"}}};
    }
    const Alcove here = upper_closure_alcove(datum, p, lambda);
    const Weight base = dominant_fold(datum, p, lambda).point;
    for (const auto& d : diagrams) {
        if (alcove_from_word(datum, p, d.alcove) != here) continue;
        FormalCharacter out;
        for (auto label : d.labels) out += table.simple(detail::apply_word(datum, p, label, base));
        return out;
    }
    throw UnsupportedError("no tilting data for " + lambda.str() + " at p=" + std::to_string(p));
}

}  // namespace modtensor
