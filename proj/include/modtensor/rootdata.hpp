#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "modtensor/errors.hpp"
#include "modtensor/weight.hpp"

namespace modtensor {

using Rational = boost::rational<long long>;

enum class RootSystemId { A2, B2 };

inline std::string_view system_name(RootSystemId id) { return id == RootSystemId::A2 ? "a2" : "b2"; }

inline RootSystemId parse_system(std::string_view s) {
    if (s == "a2" || s == "A2") return RootSystemId::A2;
    if (s == "b2" || s == "B2") return RootSystemId::B2;
    throw DomainError("unknown root system '" + std::string(s) + "' (expected a2 or b2)");
}

struct PositiveRoot {
    std::string_view name;
    Weight root;                 // weight coordinates
    std::array<int, 2> coroot;   // <(a,b), alpha^vee> = coroot[0]*a + coroot[1]*b
};

// 2x2 integer matrix acting on column (a,b).
struct Matrix2 {
    int m00 = 1, m01 = 0, m10 = 0, m11 = 1;

    constexpr Weight apply(Weight w) const { return {m00 * w.a + m01 * w.b, m10 * w.a + m11 * w.b}; }
    constexpr Matrix2 operator*(const Matrix2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    constexpr int det() const { return m00 * m11 - m01 * m10; }
    constexpr bool operator==(const Matrix2&) const = default;
};

struct WeylElement {
    std::string label;   // reduced word over t = s_{alpha1}, u = s_{alpha2}; "e" for identity
    int length = 0;
    Matrix2 action;
};

class RootDatum {
public:
    static const RootDatum& get(RootSystemId id) {
        static const RootDatum a2(RootSystemId::A2);
        static const RootDatum b2(RootSystemId::B2);
        return id == RootSystemId::A2 ? a2 : b2;
    }

    RootSystemId id() const { return id_; }
    std::string_view name() const { return system_name(id_); }
    const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
    std::size_t num_positive_roots() const { return roots_.size(); }
    Weight rho() const { return kRho; }
    int coxeter_number() const { return id_ == RootSystemId::A2 ? 3 : 4; }
    const std::vector<WeylElement>& finite_weyl() const { return weyl_; }
    const WeylElement& longest_element() const { return weyl_.back(); }
    const std::vector<Weight>& minuscule_weights() const { return minuscule_; }

    // Index of the highest short root (reflection defining the upper wall of C_0).
    std::size_t highest_short_root() const { return 2; }
    std::size_t highest_root() const { return id_ == RootSystemId::A2 ? 2 : 3; }

    // Symmetric W-invariant form on weight coordinates, scaled to be integral.
    int form(Weight x, Weight y) const {
        const auto& g = gram_;
        return x.a * (g[0] * y.a + g[1] * y.b) + x.b * (g[1] * y.a + g[2] * y.b);
    }

    int pair(Weight w, std::size_t root) const {
        check_root(root);
        const auto& c = roots_[root].coroot;
        return c[0] * w.a + c[1] * w.b;
    }

    Weight reflect(Weight w, std::size_t root) const {
        return w - roots_[root].root * pair(w, root);
    }

    Matrix2 reflection_matrix(std::size_t root) const {
        check_root(root);
        const auto& r = roots_[root].root;
        const auto& c = roots_[root].coroot;
        return {1 - r.a * c[0], -r.a * c[1], -r.b * c[0], 1 - r.b * c[1]};
    }

    // Orbit with one representative group element (index into finite_weyl) per point.
    std::vector<std::pair<Weight, std::size_t>> finite_orbit(Weight mu) const {
        std::vector<std::pair<Weight, std::size_t>> out;
        for (std::size_t i = 0; i < weyl_.size(); ++i) {
            Weight img = weyl_[i].action.apply(mu);
            bool seen = false;
            for (const auto& [w, idx] : out) seen = seen || w == img;
            if (!seen) out.emplace_back(img, i);
        }
        return out;
    }

    // Solve delta = c*alpha1 + d*alpha2 over the rationals.
    std::pair<Rational, Rational> root_coordinates(Weight delta) const {
        const Weight r1 = roots_[0].root, r2 = roots_[1].root;
        const long long det = static_cast<long long>(r1.a) * r2.b - static_cast<long long>(r2.a) * r1.b;
        Rational c(static_cast<long long>(delta.a) * r2.b - static_cast<long long>(r2.a) * delta.b, det);
        Rational d(static_cast<long long>(r1.a) * delta.b - static_cast<long long>(delta.a) * r1.b, det);
        return {c, d};
    }

    // Integral root coordinates if delta lies in the root lattice.
    bool root_lattice_coordinates(Weight delta, long long& c, long long& d) const {
        auto [rc, rd] = root_coordinates(delta);
        if (rc.denominator() != 1 || rd.denominator() != 1) return false;
        c = rc.numerator();
        d = rd.numerator();
        return true;
    }

    bool in_root_lattice(Weight delta) const {
        long long c = 0, d = 0;
        return root_lattice_coordinates(delta, c, d);
    }

    // lambda <= mu in the dominance order.
    bool leq(Weight lambda, Weight mu) const {
        long long c = 0, d = 0;
        return root_lattice_coordinates(mu - lambda, c, d) && c >= 0 && d >= 0;
    }

    // Linear (not dot) action: dominant representative of the W_fin-orbit.
    Weight dominant_representative(Weight w) const {
        while (w.a < 0 || w.b < 0) w = reflect(w, w.a < 0 ? 0 : 1);
        return w;
    }

    // -w0; swaps coordinates in A2, identity in B2.
    Weight dual(Weight w) const { return id_ == RootSystemId::A2 ? Weight{w.b, w.a} : w; }

private:
    explicit RootDatum(RootSystemId id) : id_(id) {
        if (id == RootSystemId::A2) {
            roots_ = {{"alpha1", {2, -1}, {1, 0}},
                      {"alpha2", {-1, 2}, {0, 1}},
                      {"alpha_h", {1, 1}, {1, 1}}};
            gram_ = {2, 1, 2};  // 3 * ((w_i, w_j))
            minuscule_ = {kOmega1, kOmega2};
        } else {
            roots_ = {{"alpha1", {2, -2}, {1, 0}},
                      {"alpha2", {-1, 2}, {0, 1}},
                      {"alpha_hs", {1, 0}, {2, 1}},
                      {"alpha_h", {0, 2}, {1, 1}}};
            gram_ = {2, 1, 1};  // (alpha1, alpha1) = 4, (alpha2, alpha2) = 2
            minuscule_ = {kOmega2};
        }
        build_weyl_group();
    }

    void check_root(std::size_t root) const {
        if (root >= roots_.size())
            throw std::out_of_range("positive root index " + std::to_string(root) + " out of range");
    }

    void build_weyl_group() {
        const std::array<std::pair<char, Matrix2>, 2> gens{{{'t', reflection_matrix(0)}, {'u', reflection_matrix(1)}}};
        weyl_.push_back({"e", 0, Matrix2{}});
        for (std::size_t head = 0; head < weyl_.size(); ++head) {
            const WeylElement cur = weyl_[head];
            for (const auto& [g, m] : gens) {
                Matrix2 next = m * cur.action;
                bool known = false;
                for (const auto& e : weyl_) known = known || e.action == next;
                if (known) continue;
                std::string label = cur.length == 0 ? std::string(1, g) : std::string(1, g) + cur.label;
                weyl_.push_back({label, cur.length + 1, next});
            }
        }
    }

    RootSystemId id_;
    std::vector<PositiveRoot> roots_;
    std::array<int, 3> gram_{};
    std::vector<WeylElement> weyl_;
    std::vector<Weight> minuscule_;
};

}  // namespace modtensor
