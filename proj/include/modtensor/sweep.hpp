#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "modtensor/classify.hpp"
#include "modtensor/tensor.hpp"

namespace modtensor {

struct PairRecord {
    Weight lambda, mu;
    bool oracle_mf = false;
    bool cr = false;
    bool mf = false;
    std::vector<RowMatch> rows;
};

struct Mismatch {
    Weight lambda, mu;
    bool oracle = false;
    bool table = false;
    std::vector<RowMatch> rows;
    SimpleExpansion decomposition;
};

struct Violation {
    std::string check;  // "mf=>cr", "necessary", "weight-bound", "theorem-b", "char0", "verlinde-*", ...
    Weight lambda, mu;
    std::string detail;
};

struct SweepReport {
    std::string system;
    int p = 0;
    std::size_t pairs_total = 0;
    std::size_t mf_oracle_true = 0;
    std::size_t mf_table_true = 0;
    std::size_t cr_table_true = 0;
    std::size_t reflection_small_pairs = 0;
    std::size_t fusion_triples = 0;
    std::vector<Mismatch> mismatches;
    std::vector<Violation> violations;
    std::vector<PairRecord> records;
    double elapsed_seconds = 0;
    unsigned workers = 1;

    bool ok() const { return mismatches.empty() && violations.empty(); }
};

struct SweepOptions {
    unsigned workers = 1;
    bool theorem_b = true;
    bool necessary = true;
    bool verlinde = true;
    bool char0 = true;
};

namespace detail {

struct PairOutcome {
    PairRecord record;
    std::optional<Mismatch> mismatch;
    std::vector<Violation> violations;
    bool reflection_small = false;
};

inline std::string expansion_text(const SimpleExpansion& e) {
    std::string s;
    for (const auto& [w, c] : e.sorted()) s += (s.empty() ? "" : " ") + w.str() + ":" + std::to_string(c);
    return s;
}

inline PairOutcome check_pair(CharacterTable& table, Weight lambda, Weight mu, const SweepOptions& opt,
                              const std::map<std::pair<Weight, Weight>, FusionExpansion>& fusion) {
    const RootDatum& datum = table.datum();
    const int p = table.p();
    PairOutcome out;
    auto& rec = out.record;
    rec.lambda = lambda;
    rec.mu = mu;
    const SimpleExpansion dec = tensor_simple_decomposition(table, lambda, mu);
    rec.oracle_mf = is_multiplicity_free(dec);
    auto cr = cr_rows(datum, p, lambda, mu);
    auto mf = mf_rows(datum, p, lambda, mu);
    rec.cr = !cr.empty();
    rec.mf = !mf.empty();
    rec.rows = cr;
    rec.rows.insert(rec.rows.end(), mf.begin(), mf.end());
    auto flag = [&](std::string check, std::string detail) {
        out.violations.push_back({std::move(check), lambda, mu, std::move(detail)});
    };

    if (rec.oracle_mf != rec.mf) out.mismatch = Mismatch{lambda, mu, rec.oracle_mf, rec.mf, rec.rows, dec};
    if (rec.mf && !rec.cr) flag("mf=>cr", "MF row matched without a CR row");

    if (opt.necessary) {
        const auto nec = cr_necessary_conditions(datum, p, lambda, mu, dec);
        if (rec.cr && !nec.all())
            flag("necessary", std::string("levi=") + (nec.levi ? "1" : "0") + " singular=" + (nec.singular ? "1" : "0") +
                                  " gfd=" + (nec.gfd ? "1" : "0"));
        if (rec.cr && (!weight_space_bound_check(table, lambda, mu, dec) || !weight_space_bound_check(table, mu, lambda, dec)))
            flag("weight-bound", expansion_text(dec));
    }

    if (opt.theorem_b) {
        for (int swapped = 0; swapped < 2; ++swapped) {
            const Weight x = swapped ? mu : lambda, y = swapped ? lambda : mu;
            if (!reflection_small(datum, p, x, y)) continue;
            out.reflection_small = true;
            const auto formula = reflection_small_multiplicities(table, x, y);
            if (!(formula == dec)) flag("theorem-b", "formula " + expansion_text(formula) + " vs oracle " + expansion_text(dec));
            const Alcove c = upper_closure_alcove(datum, p, x);
            for (const auto& [nu, m] : dec)
                if (!in_upper_closure(datum, p, c, nu)) flag("theorem-b-support", nu.str());
        }
    }

    if (opt.char0 && rec.cr && !rec.oracle_mf && is_multiplicity_free(klimyk_char0(datum, lambda, mu)))
        flag("char0", "CR and MF in characteristic zero but not MF");

    if (opt.verlinde && rec.mf && is_p_regular(datum, p, lambda)) {
        const Weight base = dominant_fold(datum, p, lambda).point;
        auto it = fusion.find({base, mu});
        if (it != fusion.end() && it->second.max_coefficient() > 1) flag("verlinde-mf-bound", expansion_text(dec));
    }
    return out;
}

inline void check_verlinde(const RootDatum& datum, int p, SweepReport& report,
                           const std::map<std::pair<Weight, Weight>, FusionExpansion>& fusion) {
    const auto c0 = fundamental_alcove_weights(datum, p);
    auto coeff = [&](Weight l, Weight m, Weight n) { return fusion.at({l, m})[n]; };
    auto flag = [&](std::string check, Weight l, Weight m, std::string detail) {
        report.violations.push_back({std::move(check), l, m, std::move(detail)});
    };
    for (Weight l : c0) {
        for (Weight m : c0) {
            const auto char0 = klimyk_char0(datum, l, m);
            for (Weight n : c0) {
                ++report.fusion_triples;
                const auto c = coeff(l, m, n);
                if (c != coeff(n, datum.dual(m), l)) flag("verlinde-flip", l, m, n.str());
                if (c > char0[n]) flag("verlinde-char0", l, m, n.str());
                if (datum.id() == RootSystemId::B2 && c != coeff(omega_dot_b2(datum, p, l), m, omega_dot_b2(datum, p, n)))
                    flag("verlinde-omega", l, m, n.str());
            }
        }
    }
}

}  // namespace detail

inline std::vector<std::pair<Weight, Weight>> restricted_nonzero_pairs(int p) {
    std::vector<Weight> ws;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            if (a != 0 || b != 0) ws.push_back({a, b});
    std::vector<std::pair<Weight, Weight>> pairs;
    pairs.reserve(ws.size() * ws.size());
    for (Weight l : ws)
        for (Weight m : ws) pairs.emplace_back(l, m);
    return pairs;
}

inline std::map<std::pair<Weight, Weight>, FusionExpansion> fusion_table(const RootDatum& datum, int p) {
    std::map<std::pair<Weight, Weight>, FusionExpansion> out;
    const auto c0 = fundamental_alcove_weights(datum, p);
    for (Weight l : c0)
        for (Weight m : c0) out[{l, m}] = verlinde_product(datum, p, l, m);
    return out;
}

// Exhaustive sweep over non-zero restricted pairs. Pairs are sharded round-robin;
// results land in fixed slots so the report does not depend on the worker count.
inline SweepReport run_sweep(CharacterTable& table, const SweepOptions& opt = {}) {
    const auto start = std::chrono::steady_clock::now();
    const RootDatum& datum = table.datum();
    const int p = table.p();
    SweepReport report;
    report.system = std::string(datum.name());
    report.p = p;
    report.workers = std::max(1u, opt.workers);

    table.warm_restricted();
    const auto fusion = fusion_table(datum, p);
    const auto pairs = restricted_nonzero_pairs(p);
    std::vector<detail::PairOutcome> outcomes(pairs.size());
    std::vector<std::exception_ptr> errors(report.workers);

    auto work = [&](unsigned k) {
        try {
            for (std::size_t i = k; i < pairs.size(); i += report.workers)
                outcomes[i] = detail::check_pair(table, pairs[i].first, pairs[i].second, opt, fusion);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    };
    if (report.workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned k = 0; k < report.workers; ++k) threads.emplace_back(work, k);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    report.pairs_total = pairs.size();
    for (auto& o : outcomes) {
        report.mf_oracle_true += o.record.oracle_mf;
        report.mf_table_true += o.record.mf;
        report.cr_table_true += o.record.cr;
        report.reflection_small_pairs += o.reflection_small;
        if (o.mismatch) report.mismatches.push_back(std::move(*o.mismatch));
        for (auto& v : o.violations) report.violations.push_back(std::move(v));
        report.records.push_back(std::move(o.record));
    }
    if (opt.verlinde) detail::check_verlinde(datum, p, report, fusion);
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace modtensor
