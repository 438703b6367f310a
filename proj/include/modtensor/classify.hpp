#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modtensor/alcoves.hpp"
#include "modtensor/simples.hpp"

namespace modtensor {

struct RowMatch {
    std::string table;  // "A2CR", "A2MF", "B2CR", "B2MF", "B2MFchar0"
    std::string row;
    bool swapped = false;
    std::size_t digit = 0;
    bool operator==(const RowMatch&) const = default;
};

struct Verdict {
    bool cr = true;
    bool mf = true;
    std::vector<RowMatch> matched_rows;
};

namespace detail {

struct RowContext {
    const RootDatum& datum;
    int p;
    Weight lambda;
    Weight mu;

    int a() const { return lambda.a; }
    int b() const { return lambda.b; }
    int ma() const { return mu.a; }
    int mb() const { return mu.b; }
    bool in(std::string_view alcove) const { return in_named_alcove(datum, p, alcove, lambda); }
    bool small() const { return reflection_small(datum, p, lambda, mu); }
};

using RowPredicate = std::function<bool(const RowContext&)>;

struct Row {
    std::string_view label;
    RowPredicate test;
};

inline std::vector<RowMatch> scan(std::string_view table, const std::vector<Row>& rows, const RootDatum& datum, int p,
                                  Weight lambda, Weight mu) {
    std::vector<RowMatch> out;
    for (const auto& row : rows) {
        for (int swapped = 0; swapped < 2; ++swapped) {
            RowContext ctx{datum, p, swapped ? mu : lambda, swapped ? lambda : mu};
            if (row.test(ctx)) out.push_back({std::string(table), std::string(row.label), swapped == 1, 0});
        }
    }
    return out;
}

// Starred rows: evaluate the base row on (b,a) coordinates of both weights.
inline RowPredicate dual_of(RowPredicate base) {
    return [base](const RowContext& c) {
        return base(RowContext{c.datum, c.p, c.datum.dual(c.lambda), c.datum.dual(c.mu)});
    };
}

inline void check_restricted_pair(int p, Weight lambda, Weight mu) {
    if (!lambda.restricted(p) || !mu.restricted(p))
        throw DomainError("classification rows need " + std::to_string(p) + "-restricted weights");
    if (lambda.is_zero() || mu.is_zero()) throw DomainError("classification rows need non-zero weights");
}

inline bool c0_or_c1(const RowContext& c) { return c.in("C0") || c.in("C1"); }

inline std::vector<Row> a2_shared_rows() {
    RowPredicate r1 = [](const RowContext& c) { return c.b() == 0 && c.mb() == 0 && c.a() + c.ma() == c.p - 1; };
    RowPredicate r2 = [](const RowContext& c) { return c.lambda == Weight{c.p - 1, 0} && c.mu == kOmega2; };
    RowPredicate r3 = [](const RowContext& c) {
        return c.in("C1") && c.a() + c.b() == c.p - 1 && c.b() < c.a() && c.mu == Weight{0, c.b() + 1};
    };
    return {{"1", r1}, {"1*", dual_of(r1)}, {"2", r2}, {"2*", dual_of(r2)}, {"3", r3}, {"3*", dual_of(r3)}};
}

inline const std::vector<Row>& a2_cr_rows() {
    static const std::vector<Row> rows = [] {
        auto r = a2_shared_rows();
        r.push_back({"4", [](const RowContext& c) { return c0_or_c1(c) && c.small(); }});
        return r;
    }();
    return rows;
}

inline const std::vector<Row>& a2_mf_rows() {
    static const std::vector<Row> rows = [] {
        auto r = a2_shared_rows();
        RowPredicate r4a = [](const RowContext& c) { return c0_or_c1(c) && c.mb() == 0 && c.small(); };
        r.push_back({"4a", r4a});
        r.push_back({"4a*", dual_of(r4a)});
        r.push_back({"4b", [](const RowContext& c) { return c.in("C1") && c.a() + c.b() == c.p - 1 && c.small(); }});
        return r;
    }();
    return rows;
}

inline std::vector<Row> b2_shared_rows() {
    return {
        {"1", [](const RowContext& c) {
             if (c.p < 3) return false;
             const Weight x{(c.p - 1) / 2, 0}, y{(c.p - 3) / 2, 1};
             return (c.lambda == x || c.lambda == y) && (c.mu == x || c.mu == y);
         }},
        {"2", [](const RowContext& c) { return c.lambda == Weight{c.p - 1, 0} && c.mu == kOmega2; }},
        {"3", [](const RowContext& c) { return c.lambda == Weight{0, c.p - 1} && c.mu == kOmega1; }},
        {"4", [](const RowContext& c) { return c.p != 3 && c.lambda == Weight{c.p - 2, 1} && c.mu == kOmega1; }},
        {"5", [](const RowContext& c) { return c.p >= 3 && c.lambda == Weight{0, c.p - 2} && c.mu == kOmega2; }},
        {"6", [](const RowContext& c) { return c.p >= 3 && c.lambda == Weight{c.p - 2, 0} && c.mu == kOmega2; }},
        {"7", [](const RowContext& c) { return c.p >= 5 && c.lambda == Weight{0, c.p - 3} && c.mu == kOmega1; }},
    };
}

inline const std::vector<Row>& b2_cr_rows() {
    static const std::vector<Row> rows = [] {
        auto r = b2_shared_rows();
        r.push_back({"8", [](const RowContext& c) {
                         return (c.in("C0") || c.in("C1") || c.in("C2") || c.in("C3")) && c.small();
                     }});
        return r;
    }();
    return rows;
}

}  // namespace detail

inline std::vector<RowMatch> stembridge_b2_char0_rows(Weight lambda, Weight mu) {
    if (!lambda.dominant() || !mu.dominant() || lambda.is_zero() || mu.is_zero())
        throw DomainError("Stembridge table needs non-zero dominant weights");
    const RootDatum& b2 = RootDatum::get(RootSystemId::B2);
    using detail::Row;
    using detail::RowContext;
    static const std::vector<Row> rows{
        {"1a", [](const RowContext& c) { return c.mu == kOmega1; }},
        {"1b", [](const RowContext& c) { return c.mu == kOmega2; }},
        {"2a", [](const RowContext& c) { return c.b() == 0 && c.mb() == 0; }},
        {"2b", [](const RowContext& c) { return c.a() == 0 && c.ma() == 0; }},
        {"3", [](const RowContext& c) { return c.b() == 0 && c.ma() == 0; }},
        {"4", [](const RowContext& c) { return c.b() == 1 && c.mb() == 0; }},
    };
    return detail::scan("B2MFchar0", rows, b2, 0, lambda, mu);
}

inline std::optional<std::string> stembridge_b2_char0_mf(Weight lambda, Weight mu) {
    auto m = stembridge_b2_char0_rows(lambda, mu);
    if (m.empty()) return std::nullopt;
    return m.front().row;
}

namespace detail {

inline const std::vector<Row>& b2_mf_rows() {
    static const std::vector<Row> rows = [] {
        auto r = b2_shared_rows();
        auto c123 = [](const RowContext& c) { return c.in("C1") || c.in("C2") || c.in("C3"); };
        auto ff = [](const RowContext& c) { return 2 * c.a() + c.b(); };
        std::vector<Row> extra{
            {"8a", [](const RowContext& c) {
                 return c.in("C0") && c.small() && !stembridge_b2_char0_rows(c.lambda, c.mu).empty();
             }},
            {"8b", [c123](const RowContext& c) { return c123(c) && (c.mu == kOmega1 || c.mu == kOmega2) && c.small(); }},
            {"8c", [](const RowContext& c) { return c.in("C1") && c.b() == 1 && c.mb() == 0 && c.small(); }},
            {"8c-omega", [ff](const RowContext& c) { return c.in("C1") && ff(c) == c.p - 1 && c.mb() == 0 && c.small(); }},
            {"8d", [](const RowContext& c) { return c.in("C1") && c.b() == 0 && c.mb() <= 1 && c.small(); }},
            {"8d-omega", [ff](const RowContext& c) { return c.in("C1") && ff(c) == c.p - 2 && c.mb() <= 1 && c.small(); }},
            {"8e", [](const RowContext& c) { return c.in("C1") && c.b() == 0 && c.ma() == 0 && c.small(); }},
            {"8e-omega", [ff](const RowContext& c) { return c.in("C1") && ff(c) == c.p - 2 && c.ma() == 0 && c.small(); }},
            {"8f", [](const RowContext& c) { return c.p >= 3 && c.lambda == Weight{(c.p - 1) / 2, 0} && c.small(); }},
            {"8f-omega", [](const RowContext& c) { return c.p >= 3 && c.lambda == Weight{(c.p - 3) / 2, 1} && c.small(); }},
            {"8g", [](const RowContext& c) { return c.in("C2") && c.a() + c.b() == c.p - 1 && c.mb() == 0 && c.small(); }},
            {"8h", [](const RowContext& c) { return c.in("C2") && c.a() + c.b() == c.p - 1 && c.ma() == 0 && c.small(); }},
            {"8i", [ff](const RowContext& c) { return c.in("C3") && ff(c) == 2 * c.p - 2 && c.ma() == 0 && c.small(); }},
            {"8j", [ff](const RowContext& c) { return c.in("C3") && ff(c) == 2 * c.p - 2 && c.mb() <= 1 && c.small(); }},
            {"8k", [ff](const RowContext& c) { return c.in("C3") && ff(c) == 2 * c.p - 1 && c.mb() == 0 && c.small(); }},
        };
        r.insert(r.end(), extra.begin(), extra.end());
        return r;
    }();
    return rows;
}

}  // namespace detail

inline std::vector<RowMatch> cr_rows(const RootDatum& datum, int p, Weight lambda, Weight mu) {
    detail::check_restricted_pair(p, lambda, mu);
    if (datum.id() == RootSystemId::A2) return detail::scan("A2CR", detail::a2_cr_rows(), datum, p, lambda, mu);
    return detail::scan("B2CR", detail::b2_cr_rows(), datum, p, lambda, mu);
}

inline std::vector<RowMatch> mf_rows(const RootDatum& datum, int p, Weight lambda, Weight mu) {
    detail::check_restricted_pair(p, lambda, mu);
    if (datum.id() == RootSystemId::A2) return detail::scan("A2MF", detail::a2_mf_rows(), datum, p, lambda, mu);
    return detail::scan("B2MF", detail::b2_mf_rows(), datum, p, lambda, mu);
}

namespace detail {
inline std::optional<std::string> first_row(const std::vector<RowMatch>& m) {
    if (m.empty()) return std::nullopt;
    return m.front().row;
}
}  // namespace detail

inline std::optional<std::string> a2_cr_row(int p, Weight lambda, Weight mu) {
    return detail::first_row(cr_rows(RootDatum::get(RootSystemId::A2), p, lambda, mu));
}
inline std::optional<std::string> a2_mf_row(int p, Weight lambda, Weight mu) {
    return detail::first_row(mf_rows(RootDatum::get(RootSystemId::A2), p, lambda, mu));
}
inline std::optional<std::string> b2_cr_row(int p, Weight lambda, Weight mu) {
    return detail::first_row(cr_rows(RootDatum::get(RootSystemId::B2), p, lambda, mu));
}
inline std::optional<std::string> b2_mf_row(int p, Weight lambda, Weight mu) {
    return detail::first_row(mf_rows(RootDatum::get(RootSystemId::B2), p, lambda, mu));
}

// Steinberg reduction: conjunction of the restricted verdicts digit by digit.
inline Verdict verdict(const RootDatum& datum, int p, Weight lambda, Weight mu) {
    check_prime(p);
    if (!lambda.dominant() || !mu.dominant()) throw DomainError("verdict needs dominant weights");
    auto dl = base_p_expand(p, lambda), dm = base_p_expand(p, mu);
    const std::size_t n = std::max(dl.size(), dm.size());
    dl.resize(n);
    dm.resize(n);
    Verdict v;
    for (std::size_t i = 0; i < n; ++i) {
        if (dl[i].is_zero() || dm[i].is_zero()) continue;
        auto cr = cr_rows(datum, p, dl[i], dm[i]);
        auto mf = mf_rows(datum, p, dl[i], dm[i]);
        v.cr = v.cr && !cr.empty();
        v.mf = v.mf && !mf.empty();
        for (auto* list : {&cr, &mf})
            for (auto m : *list) { m.digit = i; v.matched_rows.push_back(std::move(m)); }
    }
    return v;
}

}  // namespace modtensor
