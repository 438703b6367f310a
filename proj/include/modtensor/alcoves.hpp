#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "modtensor/rootdata.hpp"

namespace modtensor {

// s_{alpha,r}; fixes H_{alpha,r} = { x : <x+rho, alpha^vee> = p r }.
struct AffineReflection {
    std::size_t root = 0;
    int level = 0;
    constexpr bool operator==(const AffineReflection&) const = default;
};

struct Alcove {
    std::vector<int> levels;  // one n_alpha per positive root
    auto operator<=>(const Alcove&) const = default;
};

enum class WallPosition { Lower, Upper };

struct Wall {
    AffineReflection reflection;
    WallPosition position;
};

// Point y = x + rho with rational coordinates.
struct ShiftedPoint {
    Rational a, b;
};

namespace detail {

inline long long floor_div(long long n, long long d) {
    long long q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

inline long long ceil_div(long long n, long long d) { return -floor_div(-n, d); }

inline Rational pair_point(const RootDatum& datum, const ShiftedPoint& y, std::size_t root) {
    const auto& c = datum.positive_roots()[root].coroot;
    return y.a * c[0] + y.b * c[1];
}

inline long long floor_rational(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

// Vertices of the closed region; empty if the levels do not describe an alcove.
inline std::vector<ShiftedPoint> closed_vertices(const RootDatum& datum, int p, const std::vector<int>& levels) {
    struct Line { std::array<int, 2> c; long long v; };
    std::vector<Line> lines;
    const auto& roots = datum.positive_roots();
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (int k = 0; k < 2; ++k)
            lines.push_back({roots[i].coroot, static_cast<long long>(p) * (levels[i] + k)});

    std::vector<ShiftedPoint> verts;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const auto& l1 = lines[i];
            const auto& l2 = lines[j];
            long long det = static_cast<long long>(l1.c[0]) * l2.c[1] - static_cast<long long>(l1.c[1]) * l2.c[0];
            if (det == 0) continue;
            ShiftedPoint y{Rational(l1.v * l2.c[1] - l2.v * l1.c[1], det),
                           Rational(l1.c[0] * l2.v - l2.c[0] * l1.v, det)};
            bool inside = true;
            for (std::size_t r = 0; r < roots.size() && inside; ++r) {
                Rational v = pair_point(datum, y, r);
                inside = v >= Rational(static_cast<long long>(p) * levels[r]) &&
                         v <= Rational(static_cast<long long>(p) * (levels[r] + 1));
            }
            if (!inside) continue;
            bool dup = false;
            for (const auto& q : verts) dup = dup || (q.a == y.a && q.b == y.b);
            if (!dup) verts.push_back(y);
        }
    }
    return verts;
}

inline std::optional<ShiftedPoint> interior_point(const RootDatum& datum, int p, const std::vector<int>& levels) {
    if (levels.size() != datum.num_positive_roots()) return std::nullopt;
    auto verts = closed_vertices(datum, p, levels);
    if (verts.size() < 3) return std::nullopt;
    ShiftedPoint c{0, 0};
    for (const auto& v : verts) { c.a += v.a; c.b += v.b; }
    c.a /= static_cast<long long>(verts.size());
    c.b /= static_cast<long long>(verts.size());
    for (std::size_t r = 0; r < datum.num_positive_roots(); ++r) {
        Rational v = pair_point(datum, c, r);
        if (!(v > Rational(static_cast<long long>(p) * levels[r]) &&
              v < Rational(static_cast<long long>(p) * (levels[r] + 1))))
            return std::nullopt;
    }
    return c;
}

inline std::vector<int> levels_of_interior(const RootDatum& datum, int p, const ShiftedPoint& y) {
    std::vector<int> levels;
    for (std::size_t r = 0; r < datum.num_positive_roots(); ++r)
        levels.push_back(static_cast<int>(floor_div(
            pair_point(datum, y, r).numerator(), pair_point(datum, y, r).denominator() * p)));
    return levels;
}

inline ShiftedPoint reflect_point(const RootDatum& datum, int p, AffineReflection s, const ShiftedPoint& y) {
    Rational shift = pair_point(datum, y, s.root) - Rational(static_cast<long long>(p) * s.level);
    const Weight r = datum.positive_roots()[s.root].root;
    return {y.a - shift * r.a, y.b - shift * r.b};
}

}  // namespace detail

inline void check_prime(int p) {
    if (p < 2) throw DomainError("p must be at least 2 (got " + std::to_string(p) + ")");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw DomainError(std::to_string(p) + " is not prime");
}

// Validated alcove; throws when the open region is empty.
inline Alcove make_alcove(const RootDatum& datum, int p, std::vector<int> levels) {
    if (!detail::interior_point(datum, p, levels))
        throw DomainError("levels do not describe a non-empty alcove for p=" + std::to_string(p));
    return Alcove{std::move(levels)};
}

inline ShiftedPoint alcove_interior_point(const RootDatum& datum, int p, const Alcove& c) {
    auto pt = detail::interior_point(datum, p, c.levels);
    if (!pt) throw DomainError("empty alcove");
    return *pt;
}

inline Alcove fundamental_alcove(const RootDatum& datum) {
    return Alcove{std::vector<int>(datum.num_positive_roots(), 0)};
}

inline Weight dot_reflect(const RootDatum& datum, int p, AffineReflection s, Weight x) {
    const int v = datum.pair(x + datum.rho(), s.root);
    return x - datum.positive_roots()[s.root].root * (v - p * s.level);
}

inline Alcove upper_closure_alcove(const RootDatum& datum, int p, Weight x) {
    check_prime(p);
    Alcove c;
    for (std::size_t r = 0; r < datum.num_positive_roots(); ++r)
        c.levels.push_back(static_cast<int>(detail::ceil_div(datum.pair(x + datum.rho(), r), p) - 1));
    return c;
}

inline bool is_p_regular(const RootDatum& datum, int p, Weight x) {
    for (std::size_t r = 0; r < datum.num_positive_roots(); ++r)
        if (datum.pair(x + datum.rho(), r) % p == 0) return false;
    return true;
}

inline bool in_alcove(const RootDatum& datum, int p, const Alcove& c, Weight x) {
    for (std::size_t r = 0; r < datum.num_positive_roots(); ++r) {
        int v = datum.pair(x + datum.rho(), r);
        if (!(p * c.levels[r] < v && v < p * (c.levels[r] + 1))) return false;
    }
    return true;
}

inline bool in_upper_closure(const RootDatum& datum, int p, const Alcove& c, Weight x) {
    for (std::size_t r = 0; r < datum.num_positive_roots(); ++r) {
        int v = datum.pair(x + datum.rho(), r);
        if (!(p * c.levels[r] < v && v <= p * (c.levels[r] + 1))) return false;
    }
    return true;
}

inline bool in_closure(const RootDatum& datum, int p, const Alcove& c, Weight x) {
    for (std::size_t r = 0; r < datum.num_positive_roots(); ++r) {
        int v = datum.pair(x + datum.rho(), r);
        if (!(p * c.levels[r] <= v && v <= p * (c.levels[r] + 1))) return false;
    }
    return true;
}

inline int separating_hyperplanes(const Alcove& x, const Alcove& y) {
    int n = 0;
    for (std::size_t r = 0; r < x.levels.size(); ++r) n += std::abs(x.levels[r] - y.levels[r]);
    return n;
}

inline Alcove reflect_alcove(const RootDatum& datum, int p, AffineReflection s, const Alcove& c) {
    auto y = detail::reflect_point(datum, p, s, alcove_interior_point(datum, p, c));
    return Alcove{detail::levels_of_interior(datum, p, y)};
}

namespace detail {

inline std::vector<Wall> compute_walls(const RootDatum& datum, int p, const Alcove& c) {
    const ShiftedPoint inner = alcove_interior_point(datum, p, c);
    std::vector<Wall> out;
    for (std::size_t r = 0; r < datum.num_positive_roots(); ++r) {
        for (int k = 0; k < 2; ++k) {
            AffineReflection s{r, c.levels[r] + k};
            Alcove image{detail::levels_of_interior(datum, p, detail::reflect_point(datum, p, s, inner))};
            if (separating_hyperplanes(c, image) == 1)
                out.push_back({s, k == 0 ? WallPosition::Lower : WallPosition::Upper});
        }
    }
    if (out.size() != 3) throw InvariantError("alcove does not have exactly three walls");
    return out;
}

}  // namespace detail

inline std::vector<Wall> walls(const RootDatum& datum, int p, const Alcove& c) {
    static std::mutex mutex;
    static std::map<std::tuple<RootSystemId, int, std::vector<int>>, std::vector<Wall>> memo;
    auto key = std::make_tuple(datum.id(), p, c.levels);
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    auto result = detail::compute_walls(datum, p, c);
    std::lock_guard lock(mutex);
    memo.emplace(std::move(key), result);
    return result;
}

// Acts by x -> M(x+rho) - rho + p*gamma.
struct SignedAffineElement {
    std::size_t linear = 0;  // index into finite_weyl()
    Weight translation;      // gamma, weight coordinates (always in the root lattice)
    int sign = 1;

    Weight apply(const RootDatum& datum, int p, Weight x) const {
        return datum.finite_weyl()[linear].action.apply(x + datum.rho()) - datum.rho() + translation * p;
    }

    ShiftedPoint apply_shifted(const RootDatum& datum, int p, const ShiftedPoint& y) const {
        const Matrix2& m = datum.finite_weyl()[linear].action;
        return {y.a * m.m00 + y.b * m.m01 + Rational(static_cast<long long>(p) * translation.a),
                y.a * m.m10 + y.b * m.m11 + Rational(static_cast<long long>(p) * translation.b)};
    }

    std::string linear_label(const RootDatum& datum) const { return datum.finite_weyl()[linear].label; }

    bool operator==(const SignedAffineElement&) const = default;
};

namespace detail {

inline std::size_t weyl_index(const RootDatum& datum, const Matrix2& m) {
    const auto& w = datum.finite_weyl();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i].action == m) return i;
    throw InvariantError("matrix is not in the finite Weyl group");
}

}  // namespace detail

inline SignedAffineElement identity_element() { return {}; }

inline SignedAffineElement as_element(const RootDatum& datum, AffineReflection s) {
    return {detail::weyl_index(datum, datum.reflection_matrix(s.root)),
            datum.positive_roots()[s.root].root * s.level, -1};
}

// (f * g)(x) = f(g(x)).
inline SignedAffineElement compose(const RootDatum& datum, const SignedAffineElement& f, const SignedAffineElement& g) {
    const Matrix2& mf = datum.finite_weyl()[f.linear].action;
    const Matrix2& mg = datum.finite_weyl()[g.linear].action;
    return {detail::weyl_index(datum, mf * mg), mf.apply(g.translation) + f.translation, f.sign * g.sign};
}

inline std::vector<SignedAffineElement> wc_elements(const RootDatum& datum, int p, const Alcove& c) {
    std::vector<SignedAffineElement> gens;
    for (const auto& w : walls(datum, p, c))
        if (w.position == WallPosition::Lower) gens.push_back(as_element(datum, w.reflection));
    std::vector<SignedAffineElement> group{identity_element()};
    for (std::size_t head = 0; head < group.size(); ++head) {
        for (const auto& g : gens) {
            auto next = compose(datum, g, group[head]);
            if (std::find(group.begin(), group.end(), next) == group.end()) group.push_back(next);
            if (group.size() > 64) throw InvariantError("W_C closure did not terminate");
        }
    }
    return group;
}

struct FoldResult {
    Weight point;
    int sign = 1;
    std::vector<AffineReflection> path;
};

enum class WallOrder { Forward, Reverse };

inline FoldResult fold_to_closure(const RootDatum& datum, int p, const Alcove& c, Weight x,
                                  WallOrder order = WallOrder::Forward) {
    auto ws = walls(datum, p, c);
    if (order == WallOrder::Reverse) std::reverse(ws.begin(), ws.end());
    FoldResult out{x, 1, {}};
    for (int guard = 0; guard < 100000; ++guard) {
        bool moved = false;
        for (const auto& w : ws) {
            const int v = datum.pair(out.point + datum.rho(), w.reflection.root);
            const int bound = p * w.reflection.level;
            const bool violated = w.position == WallPosition::Lower ? v < bound : v > bound;
            if (!violated) continue;
            out.point = dot_reflect(datum, p, w.reflection, out.point);
            out.sign = -out.sign;
            out.path.push_back(w.reflection);
            moved = true;
            break;
        }
        if (!moved) return out;
    }
    throw InvariantError("fold_to_closure did not terminate");
}

// Dominant representative under the finite dot action (ignores p).
inline Weight finite_dot_dominant(const RootDatum& datum, Weight x) {
    return datum.dominant_representative(x + datum.rho()) - datum.rho();
}

// Number of hyperplanes separating C_0 from the alcove of the finite-dot-dominant
// representative of x; upper-closure convention on walls.
inline int affine_length(const RootDatum& datum, int p, Weight x) {
    Weight y = finite_dot_dominant(datum, x);
    int len = 0;
    for (int n : upper_closure_alcove(datum, p, y).levels) len += std::max(n, 0);
    return len;
}

struct DominantFold {
    Weight point;
    int sign = 1;
    int length = 0;
};

inline DominantFold dominant_fold(const RootDatum& datum, int p, Weight x) {
    auto f = fold_to_closure(datum, p, fundamental_alcove(datum), x);
    return {f.point, f.sign, affine_length(datum, p, x)};
}

inline Weight omega_dot_b2(const RootDatum& datum, int p, Weight lambda) {
    if (datum.id() != RootSystemId::B2) throw UnsupportedError("the C_0 stabiliser action is only implemented for B2");
    return {lambda.a, p - 2 * lambda.a - lambda.b - 4};
}

// Named alcoves from words in s = s_{alpha_hs,1}, t = s_{alpha1,0}, u = s_{alpha2,0}
// applied right to left to C_0.
inline Alcove alcove_from_word(const RootDatum& datum, int p, std::string_view word) {
    ShiftedPoint y = alcove_interior_point(datum, p, fundamental_alcove(datum));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        AffineReflection s;
        switch (*it) {
            case 's': s = {datum.highest_short_root(), 1}; break;
            case 't': s = {0, 0}; break;
            case 'u': s = {1, 0}; break;
            case 'e': continue;
            default: throw DomainError(std::string("bad generator '") + *it + "' in alcove word");
        }
        y = detail::reflect_point(datum, p, s, y);
    }
    return Alcove{detail::levels_of_interior(datum, p, y)};
}

inline std::string_view alcove_word(const RootDatum& datum, std::string_view name) {
    static const std::map<std::string_view, std::string_view> a2{
        {"C0", "e"}, {"C1", "s"}, {"C2a", "su"}, {"C2b", "st"}};
    static const std::map<std::string_view, std::string_view> b2{
        {"C0", "e"}, {"C1", "s"}, {"C2", "st"}, {"C3", "stu"}, {"C3a", "sts"}, {"C4a", "stut"}, {"C4b", "stus"}};
    const auto& table = datum.id() == RootSystemId::A2 ? a2 : b2;
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown alcove name " + std::string(name));
    return it->second;
}

inline Alcove named_alcove(const RootDatum& datum, int p, std::string_view name) {
    static std::mutex mutex;
    static std::map<std::tuple<RootSystemId, int, std::string>, Alcove> memo;
    auto key = std::make_tuple(datum.id(), p, std::string(name));
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    Alcove c = alcove_from_word(datum, p, alcove_word(datum, name));
    std::lock_guard lock(mutex);
    memo.emplace(std::move(key), c);
    return c;
}

inline bool in_named_alcove(const RootDatum& datum, int p, std::string_view name, Weight x) {
    return in_alcove(datum, p, named_alcove(datum, p, name), x);
}

inline bool in_named_upper_closure(const RootDatum& datum, int p, std::string_view name, Weight x) {
    return in_upper_closure(datum, p, named_alcove(datum, p, name), x);
}

inline bool reflection_small(const RootDatum& datum, int p, Weight lambda, Weight mu) {
    if (!lambda.dominant() || !mu.dominant()) throw DomainError("reflection_small needs dominant weights");
    const Alcove c = upper_closure_alcove(datum, p, lambda);
    const auto orbit = datum.finite_orbit(mu);
    for (const auto& w : walls(datum, p, c)) {
        if (!datum.leq(lambda, dot_reflect(datum, p, w.reflection, lambda))) continue;
        for (const auto& [nu, idx] : orbit) {
            const Weight x = lambda + nu;
            if (!datum.leq(x, dot_reflect(datum, p, w.reflection, x))) return false;
        }
    }
    return true;
}

// Closed-form inequalities for the alcoves containing restricted weights;
// nullopt where no closed form is tabulated.
inline std::optional<bool> reflection_small_closed_form(const RootDatum& datum, int p, Weight lambda, Weight mu) {
    const int a = lambda.a, b = lambda.b, a2 = mu.a, b2 = mu.b;
    auto up = [&](std::string_view n) { return in_named_upper_closure(datum, p, n, lambda); };
    if (datum.id() == RootSystemId::A2) {
        if (up("C0")) return a + b + a2 + b2 <= p - 2;
        if (up("C1")) return a + a2 + b2 <= p - 1 && b + a2 + b2 <= p - 1;
        return std::nullopt;
    }
    if (up("C0")) return 2 * a + b + 2 * a2 + b2 <= p - 3;
    if (up("C1")) return a + b + a2 + b2 <= p - 2;
    if (up("C2")) return 2 * a + b + 2 * a2 + b2 <= 2 * p - 3 && b + 2 * a2 + b2 <= p - 1;
    if (up("C3")) return a + a2 + b2 <= p - 1 && b + 2 * a2 + b2 <= p - 1;
    return std::nullopt;
}

}  // namespace modtensor
