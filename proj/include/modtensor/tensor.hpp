#pragma once

#include <algorithm>
#include <string>

#include "modtensor/alcoves.hpp"
#include "modtensor/characters.hpp"
#include "modtensor/simples.hpp"

namespace modtensor {

struct FusionTag {};
using FusionExpansion = WeightSum<FusionTag>;  // labels in C_0, basis T(nu) modulo negligibles

// Peel a chi-basis expansion of a module character into simple characters.
inline SimpleExpansion peel_chi_to_simples(CharacterTable& table, ChiExpansion e) {
    SimpleExpansion out;
    while (!e.empty()) {
        auto [top, c] = e.top();
        if (c < 0 || !top.dominant())
            throw InvariantError("peeling hit a negative coefficient at " + top.str() + ": not a module character");
        out.add(top, c);
        e.add_scaled(table.simple_chi(top), -c);
    }
    return out;
}

// Same decomposition, obtained by direct convolution and peeling with formal
// simple characters. Slower; kept as an independent cross-check.
inline SimpleExpansion decompose_formal(CharacterTable& table, FormalCharacter ch) {
    SimpleExpansion out;
    while (!ch.empty()) {
        auto [top, c] = ch.top();
        if (c < 0 || !top.dominant())
            throw InvariantError("peeling hit a negative multiplicity at " + top.str());
        out.add(top, c);
        ch.add_scaled(table.simple(top), -c);
    }
    return out;
}

inline SimpleExpansion tensor_simple_decomposition(CharacterTable& table, Weight lambda, Weight mu) {
    if (!lambda.dominant() || !mu.dominant()) throw DomainError("tensor products need dominant weights");
    // Brauer-Klimyk: ch L(lambda) * sum_b a_b chi(b) = sum_b a_b sum_nu m(nu) chi(b+nu).
    const auto cost = [&](Weight x, Weight y) { return table.simple(x).size() * table.simple_chi(y).size(); };
    if (cost(lambda, mu) > cost(mu, lambda)) std::swap(lambda, mu);
    return peel_chi_to_simples(table, multiply_chi_expansion(table.datum(), table.simple_chi(mu), table.simple(lambda)));
}

inline SimpleExpansion tensor_simple_decomposition(const RootDatum& datum, int p, Weight lambda, Weight mu) {
    CharacterTable table(datum, p);
    return tensor_simple_decomposition(table, lambda, mu);
}

inline SimpleExpansion tensor_decomposition_direct(CharacterTable& table, Weight lambda, Weight mu) {
    return decompose_formal(table, convolve(table.simple(lambda), table.simple(mu)));
}

inline bool is_multiplicity_free(const SimpleExpansion& e) { return e.max_coefficient() <= 1; }

inline bool is_multiplicity_free_oracle(CharacterTable& table, Weight lambda, Weight mu) {
    return is_multiplicity_free(tensor_simple_decomposition(table, lambda, mu));
}

inline bool is_multiplicity_free_oracle(const RootDatum& datum, int p, Weight lambda, Weight mu) {
    CharacterTable table(datum, p);
    return is_multiplicity_free_oracle(table, lambda, mu);
}

// Closed formula sum_{u in W_C} sign(u) dim L(mu)_{u.nu - lambda} over nu in the
// upper closure of C(lambda).
inline SimpleExpansion reflection_small_multiplicities(CharacterTable& table, Weight lambda, Weight mu) {
    const RootDatum& datum = table.datum();
    const int p = table.p();
    if (!reflection_small(datum, p, lambda, mu))
        throw PreconditionError(mu.str() + " is not reflection small with respect to " + lambda.str());
    const Alcove c = upper_closure_alcove(datum, p, lambda);
    const auto group = wc_elements(datum, p, c);
    const FormalCharacter& ch_mu = table.simple(mu);
    SimpleExpansion out;
    for (const auto& [delta, m] : table.weyl(mu)) {
        const Weight nu = lambda + delta;
        if (!nu.dominant() || !in_upper_closure(datum, p, c, nu)) continue;
        std::int64_t coeff = 0;
        for (const auto& u : group) coeff += u.sign * ch_mu[u.apply(datum, p, nu) - lambda];
        if (coeff < 0) throw InvariantError("negative reflection-small multiplicity at " + nu.str());
        out.add(nu, coeff);
    }
    return out;
}

inline SimpleExpansion klimyk_char0(const RootDatum& datum, Weight lambda, Weight mu) {
    SimpleExpansion out;
    for (const auto& [w, c] : multiply_by_chi(datum, weyl_character(datum, lambda), mu)) out.add(w, c);
    return out;
}

// Every weight of C_0 (interior), canonical order.
inline std::vector<Weight> fundamental_alcove_weights(const RootDatum& datum, int p) {
    std::vector<Weight> out;
    const Alcove c0 = fundamental_alcove(datum);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            if (in_alcove(datum, p, c0, {a, b})) out.push_back({a, b});
    return out;
}

inline void require_c0(const RootDatum& datum, int p, Weight w) {
    if (!in_alcove(datum, p, fundamental_alcove(datum), w))
        throw DomainError(w.str() + " does not lie in the fundamental alcove for p=" + std::to_string(p));
}

// Affine Klimyk: fold chi-terms into C-bar_0 with sign, drop wall hits.
inline FusionExpansion verlinde_product(const RootDatum& datum, int p, Weight lambda, Weight mu) {
    require_c0(datum, p, lambda);
    require_c0(datum, p, mu);
    const Alcove c0 = fundamental_alcove(datum);
    FusionExpansion out;
    for (const auto& [kappa, c] : multiply_by_chi(datum, weyl_character(datum, lambda), mu)) {
        const auto f = fold_to_closure(datum, p, c0, kappa);
        if (in_alcove(datum, p, c0, f.point)) out.add(f.point, c * f.sign);
    }
    if (!out.all_nonnegative()) throw InvariantError("negative fusion coefficient");
    return out;
}

inline std::int64_t verlinde_coefficient(const RootDatum& datum, int p, Weight lambda, Weight mu, Weight nu) {
    require_c0(datum, p, nu);
    return verlinde_product(datum, p, lambda, mu)[nu];
}

inline SimpleExpansion minuscule_decompose(const RootDatum& datum, int p, Weight lambda, Weight minuscule) {
    const auto& ms = datum.minuscule_weights();
    if (std::find(ms.begin(), ms.end(), minuscule) == ms.end())
        throw DomainError(minuscule.str() + " is not minuscule for " + std::string(datum.name()));
    if (!lambda.dominant() || !is_p_regular(datum, p, lambda))
        throw DomainError(lambda.str() + " is not a p-regular dominant weight");
    const Alcove c = upper_closure_alcove(datum, p, lambda);
    SimpleExpansion out;
    for (const auto& [w, idx] : datum.finite_orbit(minuscule))
        if (in_upper_closure(datum, p, c, lambda + w)) out.add(lambda + w, 1);
    return out;
}

struct NecessaryConditions {
    bool levi = true;
    bool singular = true;
    bool gfd = true;
    bool all() const { return levi && singular && gfd; }
};

inline bool levi_condition(const RootDatum& datum, int p, Weight lambda, Weight mu) {
    const int a = lambda.a, b = lambda.b, a2 = mu.a, b2 = mu.b;
    if (a + a2 + std::min(b, b2) > p - 1) return false;
    const int k = datum.id() == RootSystemId::A2 ? 1 : 2;
    return b + b2 + k * std::min(a, a2) <= p - 1;
}

// factors: the decomposition of L(lambda) x L(mu).
inline NecessaryConditions cr_necessary_conditions(const RootDatum& datum, int p, Weight lambda, Weight mu,
                                                   const SimpleExpansion& factors) {
    if (!lambda.restricted(p) || !mu.restricted(p)) throw DomainError("necessary conditions need restricted weights");
    NecessaryConditions out;
    out.levi = levi_condition(datum, p, lambda, mu);
    const bool reg_l = is_p_regular(datum, p, lambda), reg_m = is_p_regular(datum, p, mu);
    const int budget = (reg_l && reg_m) ? affine_length(datum, p, lambda) + affine_length(datum, p, mu) : 0;
    for (const auto& [nu, c] : factors) {
        const bool reg_nu = is_p_regular(datum, p, nu);
        if ((!reg_l || !reg_m) && reg_nu) out.singular = false;
        if (reg_l && reg_m && reg_nu && affine_length(datum, p, nu) > budget) out.gfd = false;
    }
    return out;
}

inline NecessaryConditions cr_necessary_conditions(CharacterTable& table, Weight lambda, Weight mu) {
    if (!lambda.restricted(table.p()) || !mu.restricted(table.p()))
        throw DomainError("necessary conditions need restricted weights");
    return cr_necessary_conditions(table.datum(), table.p(), lambda, mu, tensor_simple_decomposition(table, lambda, mu));
}

inline bool weight_space_bound_check(CharacterTable& table, Weight lambda, Weight mu, const SimpleExpansion& factors) {
    const FormalCharacter& ch_mu = table.simple(mu);
    for (const auto& [nu, c] : factors)
        if (c > ch_mu[nu - lambda]) return false;
    return true;
}

inline bool weight_space_bound_check(CharacterTable& table, Weight lambda, Weight mu) {
    return weight_space_bound_check(table, lambda, mu, tensor_simple_decomposition(table, lambda, mu));
}

}  // namespace modtensor
