// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modtensor/modtensor.hpp"

namespace mt = modtensor;
using mt::RootDatum;
using mt::RootSystemId;
using mt::Weight;

namespace {

const RootDatum& a2() { return RootDatum::get(RootSystemId::A2); }
const RootDatum& b2() { return RootDatum::get(RootSystemId::B2); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    int shown = 0;

    void fail(const std::string& why) {
        pass = false;
        if (shown++ < 12) notes.push_back(why);
    }
    void info(const std::string& s) { notes.push_back(s); }
};

std::vector<Weight> restricted(int p) {
    std::vector<Weight> out;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) out.push_back({a, b});
    return out;
}

std::string pair_str(Weight l, Weight m) { return l.str() + " x " + m.str(); }

mt::SimpleExpansion expansion(std::initializer_list<Weight> ws) {
    mt::SimpleExpansion e;
    for (Weight w : ws) e.add(w, 1);
    return e;
}

std::string expansion_str(const mt::SimpleExpansion& e) {
    std::ostringstream os;
    for (const auto& [w, c] : e.sorted()) os << c << "L" << w.str() << ' ';
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome mf_table_reproduction(const RootDatum& datum, const std::vector<int>& primes) {
    Outcome out;
    for (int p : primes) {
        mt::CharacterTable table(datum, p);
        mt::SweepOptions opt;
        opt.workers = 1;
        opt.theorem_b = opt.necessary = opt.verlinde = opt.char0 = false;
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = mt::run_sweep(table, opt);
        const double secs = seconds_since(t0);
        std::ostringstream os;
        os << "p=" << p << ": " << r.pairs_total << " pairs, " << r.mf_oracle_true << " MF, " << r.mismatches.size()
           << " mismatches, " << secs << " s single-threaded";
        out.info(os.str());
        for (const auto& m : r.mismatches)
            out.fail("p=" + std::to_string(p) + " " + pair_str(m.lambda, m.mu) + " oracle_mf=" +
                     std::to_string(m.oracle) + " table_mf=" + std::to_string(m.table) + " decomposition " +
                     expansion_str(m.decomposition));
        if (secs > 300) out.fail("p=" + std::to_string(p) + " exceeded the 5 minute budget");
    }
    return out;
}

Outcome reflection_small_formula() {
    Outcome out;
    for (const RootDatum* datum : {&a2(), &b2()}) {
        for (int p : {2, 3, 5, 7}) {
            mt::CharacterTable table(*datum, p);
            std::size_t count = 0;
            for (Weight l : restricted(p)) {
                for (Weight m : restricted(p)) {
                    if (!mt::reflection_small(*datum, p, l, m)) continue;
                    ++count;
                    const auto oracle = mt::tensor_simple_decomposition(table, l, m);
                    const auto formula = mt::reflection_small_multiplicities(table, l, m);
                    const std::string tag = std::string(datum->name()) + " p=" + std::to_string(p) + " ";
                    if (!(oracle == formula))
                        out.fail(tag + pair_str(l, m) + " formula " + expansion_str(formula) + "oracle " +
                                 expansion_str(oracle));
                    const auto c = mt::upper_closure_alcove(*datum, p, l);
                    for (const auto& [nu, k] : oracle)
                        if (!mt::in_upper_closure(*datum, p, c, nu))
                            out.fail(tag + pair_str(l, m) + " factor " + nu.str() + " outside the upper closure");
                }
            }
            out.info(std::string(datum->name()) + " p=" + std::to_string(p) + ": " + std::to_string(count) +
                     " reflection-small pairs");
        }
    }
    return out;
}

Outcome cr_consistency() {
    Outcome out;
    for (const RootDatum* datum : {&a2(), &b2()}) {
        for (int p : {2, 3, 5, 7}) {
            mt::CharacterTable table(*datum, p);
            const std::string tag = std::string(datum->name()) + " p=" + std::to_string(p) + " ";
            for (Weight l : restricted(p)) {
                for (Weight m : restricted(p)) {
                    const auto v = mt::verdict(*datum, p, l, m);
                    const auto factors = mt::tensor_simple_decomposition(table, l, m);
                    const auto nc = mt::cr_necessary_conditions(*datum, p, l, m, factors);
                    const bool bound = mt::weight_space_bound_check(table, l, m, factors);
                    if (v.mf && !v.cr) out.fail(tag + pair_str(l, m) + ": table MF but not table CR");
                    if (v.cr && !nc.all())
                        out.fail(tag + pair_str(l, m) + ": table CR but fails levi=" + std::to_string(nc.levi) +
                                 " singular=" + std::to_string(nc.singular) + " gfd=" + std::to_string(nc.gfd));
                    if (v.cr && !bound)
                        out.fail(tag + pair_str(l, m) + ": table CR but violates the weight-space bound, factors " +
                                 expansion_str(factors));
                }
            }
        }
    }
    return out;
}

Outcome golden_decompositions() {
    Outcome out;
    const auto& d = b2();
    auto expect = [&](int p, Weight l, Weight m, const mt::SimpleExpansion& want, const std::string& name) {
        const auto got = mt::tensor_simple_decomposition(d, p, l, m);
        if (!(got == want))
            out.fail(name + " p=" + std::to_string(p) + " " + pair_str(l, m) + ": got " + expansion_str(got) +
                     "expected " + expansion_str(want));
    };
    for (int p : {2, 3, 5, 7, 11}) {
        if (p == 2) {
            expect(p, {1, 0}, {0, 1}, expansion({{1, 1}}), "(p-1)w1 x w2");
            expect(p, {0, 1}, {1, 0}, expansion({{1, 1}}), "(p-1)w2 x w1");
            expect(p, {0, 1}, {1, 0}, expansion({{1, 1}}), "(p-2)w1+w2 x w1");
            continue;
        }
        expect(p, {p - 1, 0}, {0, 1}, expansion({{p - 1, 1}, {p - 2, 1}}), "(p-1)w1 x w2");
        expect(p, {0, p - 1}, {1, 0}, expansion({{1, p - 1}, {0, p - 1}, {1, p - 3}}), "(p-1)w2 x w1");
        if (p >= 5) {
            // Stated as written; the L((p-2)w1) summand is not a weight of lambda + wt L(w1).
            const mt::SimpleExpansion stated = expansion({{p - 1, 1}, {p - 3, 3}, {p - 2, 1}, {p - 2, 0}});
            mt::CharacterTable table(d, p);
            std::int64_t stated_dim = 0;
            for (const auto& [w, c] : stated) stated_dim += c * table.simple_dimension(w);
            out.info("p=" + std::to_string(p) + " (p-2)w1+w2 x w1: dim " +
                     std::to_string(table.simple_dimension({p - 2, 1}) * table.simple_dimension({1, 0})) +
                     ", stated summands total " + std::to_string(stated_dim));
            expect(p, {p - 2, 1}, {1, 0}, stated, "(p-2)w1+w2 x w1");
        }
        expect(p, {0, p - 2}, {0, 1}, expansion({{0, p - 1}, {1, p - 3}, {0, p - 3}}), "(p-2)w2 x w2");
        expect(p, {p - 2, 0}, {0, 1}, expansion({{p - 2, 1}, {p - 3, 1}}), "(p-2)w1 x w2");
        if (p >= 5) expect(p, {0, p - 3}, {1, 0}, expansion({{1, p - 3}, {0, p - 3}, {1, p - 5}}), "(p-3)w2 x w1");
    }

    // chi(w1)^2 as a chi-expansion, and the p=3 simple decomposition.
    mt::ChiExpansion want_chi;
    for (Weight w : {Weight{2, 0}, Weight{0, 2}, Weight{0, 0}}) want_chi.add(w, 1);
    if (!(mt::multiply_by_chi(d, mt::weyl_character(d, {1, 0}), {1, 0}) == want_chi))
        out.fail("chi(w1)*chi(w1) is not chi(2w1)+chi(2w2)+chi(0)");
    expect(3, {1, 0}, {1, 0}, expansion({{2, 0}, {0, 2}, {0, 0}}), "w1 x w1");

    for (int p : {5, 7}) {
        mt::SimpleExpansion want;
        for (int k = 0; k <= (p - 3) / 2; ++k) {
            want.add(Weight{p - 2, 1} - Weight{2, -2} * k, 1);
            want.add({0, 2 * k + 1}, 1);
        }
        expect(p, {(p - 1) / 2, 0}, {(p - 3) / 2, 1}, want, "C1 pair");
    }
    return out;
}

Outcome verlinde_identities() {
    Outcome out;
    std::size_t triples = 0;
    for (const RootDatum* datum : {&a2(), &b2()}) {
        for (int p : {5, 7}) {
            const auto ws = mt::fundamental_alcove_weights(*datum, p);
            std::map<std::pair<Weight, Weight>, mt::FusionExpansion> table;
            for (Weight l : ws)
                for (Weight m : ws) table[{l, m}] = mt::verlinde_product(*datum, p, l, m);
            const std::string tag = std::string(datum->name()) + " p=" + std::to_string(p) + " ";
            for (Weight l : ws) {
                for (Weight m : ws) {
                    const auto char0 = mt::klimyk_char0(*datum, l, m);
                    for (Weight n : ws) {
                        ++triples;
                        const auto c = table.at({l, m})[n];
                        const std::string t = tag + "c(" + l.str() + "," + m.str() + ";" + n.str() + ")";
                        if (c != table.at({n, datum->dual(m)})[l]) out.fail(t + " flipping identity");
                        if (c > char0[n]) out.fail(t + " exceeds the characteristic zero multiplicity");
                        if (datum->id() == RootSystemId::B2) {
                            const Weight ol = mt::omega_dot_b2(*datum, p, l), on = mt::omega_dot_b2(*datum, p, n);
                            if (c != table.at({ol, m})[on]) out.fail(t + " omega invariance");
                        }
                    }
                }
            }
        }
    }
    const auto c = mt::verlinde_coefficient(a2(), 7, {1, 1}, {1, 1}, {1, 1});
    if (c != 2) out.fail("A2 p=7 c(rho,rho;rho) = " + std::to_string(c));
    out.info(std::to_string(triples) + " triples checked");
    return out;
}

Outcome weight_multiplicities() {
    Outcome out;
    const auto& d = b2();
    for (int a = 0; a <= 8; ++a) {
        const auto mult = mt::freudenthal_dominant(d, {a, 0});
        std::size_t covered = 0;
        for (int dd = 0; dd <= a; ++dd) {
            for (int e = 0; 2 * e <= a - dd; ++e) {
                const Weight mu{a - dd - 2 * e, 2 * e};
                ++covered;
                const auto it = mult.find(mu);
                const std::int64_t got = it == mult.end() ? 0 : it->second;
                if (got != dd / 2 + 1)
                    out.fail("dim Weyl(" + std::to_string(a) + "w1)_" + mu.str() + " = " + std::to_string(got));
            }
        }
        if (covered != mult.size()) out.fail("dominant weights below " + std::to_string(a) + "w1 not all parametrised");
    }

    for (int p : {5, 7, 11, 13}) {
        const int r = (p - 1) / 2;
        mt::FormalCharacter want;
        for (int c = -r; c <= r; ++c)
            for (int k = -r; k <= r; ++k)
                if (std::abs(c) + std::abs(k) <= r) want.add(Weight{c, 0} + Weight{-1, 2} * k, 1);
        if (!(mt::simple_character(d, p, {r, 0}) == want))
            out.fail("closed form for L(" + std::to_string(r) + "w1) at p=" + std::to_string(p));
    }

    for (int p : {3, 5, 7, 11}) {
        mt::CharacterTable table(d, p);
        for (Weight w : {Weight{(p - 1) / 2, 0}, Weight{(p - 3) / 2, 1}})
            if (table.simple(w).max_coefficient() > 1)
                out.fail("B2 p=" + std::to_string(p) + " L" + w.str() + " has a weight of multiplicity > 1");
    }

    for (int p : {2, 3, 5, 7, 11}) {
        mt::CharacterTable table(a2(), p);
        for (Weight w : restricted(p)) {
            const bool thin = table.simple(w).max_coefficient() <= 1;
            const bool predicted = w.a == 0 || w.b == 0 || w.a + w.b == p - 1;
            if (thin != predicted)
                out.fail("A2 p=" + std::to_string(p) + " L" + w.str() + " thin=" + std::to_string(thin));
        }
    }

    // Documented only: Weyl(a w1 + w2) weight multiplicities in the same parametrisation.
    std::ostringstream os;
    os << "B2 Weyl(a w1 + w2), multiplicity by d (informational):";
    bool depends_only_on_d = true;
    for (int a = 0; a <= 8; ++a) {
        const auto mult = mt::freudenthal_dominant(d, {a, 1});
        std::map<int, std::int64_t> by_d;
        for (int dd = 0; dd <= a; ++dd) {
            for (int e = 0; 2 * e <= a - dd; ++e) {
                const auto it = mult.find({a - dd - 2 * e, 1 + 2 * e});
                const std::int64_t got = it == mult.end() ? 0 : it->second;
                if (by_d.contains(dd) && by_d[dd] != got) depends_only_on_d = false;
                by_d[dd] = got;
            }
        }
        if (a == 8) {
            for (const auto& [k, v] : by_d) os << " d=" << k << ":" << v;
        }
    }
    os << (depends_only_on_d ? " (depends only on d)" : " (varies with e)");
    out.info(os.str());
    return out;
}

Outcome steinberg_reduction() {
    Outcome out;
    std::mt19937 rng(20240611u);
    std::size_t checked = 0;
    for (const RootDatum* datum : {&a2(), &b2()}) {
        for (int p : {2, 3, 5}) {
            mt::CharacterTable table(*datum, p);
            std::uniform_int_distribution<int> coord(0, p * p - 1);
            int done = 0;
            while (done < 500) {
                const Weight l{coord(rng), coord(rng)}, m{coord(rng), coord(rng)};
                if (l.restricted(p) && m.restricted(p)) continue;
                ++done;
                ++checked;
                const bool oracle = mt::is_multiplicity_free_oracle(table, l, m);
                const auto dl = mt::base_p_expand(p, l), dm = mt::base_p_expand(p, m);
                bool digits = true;
                for (std::size_t i = 0; i < std::max(dl.size(), dm.size()); ++i) {
                    const Weight x = i < dl.size() ? dl[i] : Weight{0, 0};
                    const Weight y = i < dm.size() ? dm[i] : Weight{0, 0};
                    digits = digits && mt::is_multiplicity_free_oracle(table, x, y);
                }
                const auto v = mt::verdict(*datum, p, l, m);
                const std::string tag = std::string(datum->name()) + " p=" + std::to_string(p) + " " + pair_str(l, m);
                if (oracle != digits)
                    out.fail(tag + ": oracle " + std::to_string(oracle) + " vs digitwise " + std::to_string(digits));
                if (v.mf != oracle)
                    out.fail(tag + ": verdict mf=" + std::to_string(v.mf) + " vs oracle " + std::to_string(oracle));
            }
        }
    }
    out.info(std::to_string(checked) + " random pairs");
    return out;
}

// Element x with x.lambda0 = lambda, from the fold path back into the fundamental alcove.
mt::SignedAffineElement element_from_path(const RootDatum& datum, const std::vector<mt::AffineReflection>& path) {
    auto x = mt::identity_element();
    for (const auto& r : path) x = mt::compose(datum, x, mt::as_element(datum, r));
    return x;
}

mt::SignedAffineElement inverse_from_path(const RootDatum& datum, const std::vector<mt::AffineReflection>& path) {
    auto x = mt::identity_element();
    for (auto it = path.rbegin(); it != path.rend(); ++it) x = mt::compose(datum, x, mt::as_element(datum, *it));
    return x;
}

Outcome chi_antisymmetry() {
    Outcome out;
    std::size_t relations = 0;
    for (const RootDatum* datum : {&a2(), &b2()}) {
        for (int p : {5, 7}) {
            mt::CharacterTable table(*datum, p);
            const auto c0 = mt::fundamental_alcove(*datum);
            std::vector<mt::SignedAffineElement> simple_refl;
            for (const auto& w : mt::walls(*datum, p, c0)) simple_refl.push_back(mt::as_element(*datum, w.reflection));
            auto same_reflection = [](const mt::SignedAffineElement& x, const mt::SignedAffineElement& y) {
                return x.linear == y.linear && x.translation == y.translation;
            };

            for (Weight lambda : restricted(p)) {
                if (!mt::is_p_regular(*datum, p, lambda)) continue;
                const auto fold = mt::fold_to_closure(*datum, p, c0, lambda);
                const Weight base = fold.point;
                const auto x_inv = inverse_from_path(*datum, fold.path);
                const auto x_lambda = element_from_path(*datum, fold.path);

                // Simple reflections s with ws.C0 below w.C0: the lower walls of lambda's alcove.
                std::vector<mt::SignedAffineElement> lower;
                const auto alcove = mt::upper_closure_alcove(*datum, p, lambda);
                for (const auto& w : mt::walls(*datum, p, alcove)) {
                    if (w.position != mt::WallPosition::Lower) continue;
                    const auto conj =
                        mt::compose(*datum, x_inv, mt::compose(*datum, mt::as_element(*datum, w.reflection), x_lambda));
                    bool found = false;
                    for (const auto& s : simple_refl)
                        if (same_reflection(conj, s)) { lower.push_back(s); found = true; }
                    if (!found) out.fail("lower wall of " + lambda.str() + " is not conjugate to a simple reflection");
                }

                const auto& expansion = table.simple_chi(lambda);
                const int bound = 3 * p;
                for (const auto& [nu, coeff] : expansion)
                    if (nu.a >= bound || nu.b >= bound) out.fail("support of " + lambda.str() + " beyond search box");
                for (int a = 0; a < bound; ++a) {
                    for (int b = 0; b < bound; ++b) {
                        const Weight nu{a, b};
                        const auto f = mt::fold_to_closure(*datum, p, c0, nu);
                        if (f.point != base) continue;
                        const auto x_nu = element_from_path(*datum, f.path);
                        for (const auto& s : lower) {
                            const Weight partner = mt::compose(*datum, x_nu, s).apply(*datum, p, base);
                            if (!partner.dominant()) continue;
                            ++relations;
                            if (expansion[nu] != -expansion[partner])
                                out.fail(std::string(datum->name()) + " p=" + std::to_string(p) + " L" + lambda.str() +
                                         ": a(" + nu.str() + ")=" + std::to_string(expansion[nu]) + " but a(" +
                                         partner.str() + ")=" + std::to_string(expansion[partner]));
                        }
                    }
                }
            }
        }
    }
    if (relations == 0) out.fail("no relations were exercised");
    out.info(std::to_string(relations) + " coefficient relations checked");
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "A2 multiplicity-free table reproduction", [] { return mf_table_reproduction(a2(), {2, 3, 5, 7, 11}); }},
        {2, "B2 multiplicity-free table reproduction", [] { return mf_table_reproduction(b2(), {2, 3, 5, 7}); }},
        {3, "reflection-small closed formula and upper-closure support", reflection_small_formula},
        {4, "complete reducibility table consistency", cr_consistency},
        {5, "golden B2 decompositions", golden_decompositions},
        {6, "Verlinde identities", verlinde_identities},
        {7, "weight multiplicity closed forms", weight_multiplicities},
        {8, "Steinberg reduction on non-restricted pairs", steinberg_reduction},
        {9, "chi-coefficient antisymmetry across lower walls", chi_antisymmetry},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("AC%d %s  %s (%.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title.c_str(), seconds_since(t0));
        for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
