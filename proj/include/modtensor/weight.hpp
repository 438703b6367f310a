#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace modtensor {

// Integral weight a*w1 + b*w2 in fundamental-weight coordinates.
struct Weight {
    int a = 0;
    int b = 0;

    constexpr auto operator<=>(const Weight&) const = default;

    constexpr Weight operator+(Weight o) const { return {a + o.a, b + o.b}; }
    constexpr Weight operator-(Weight o) const { return {a - o.a, b - o.b}; }
    constexpr Weight operator-() const { return {-a, -b}; }
    constexpr Weight operator*(int k) const { return {a * k, b * k}; }
    constexpr Weight& operator+=(Weight o) { a += o.a; b += o.b; return *this; }
    constexpr Weight& operator-=(Weight o) { a -= o.a; b -= o.b; return *this; }

    [[nodiscard]] constexpr bool dominant() const { return a >= 0 && b >= 0; }
    [[nodiscard]] constexpr bool is_zero() const { return a == 0 && b == 0; }
    [[nodiscard]] constexpr bool restricted(int p) const { return dominant() && a < p && b < p; }

    [[nodiscard]] std::string str() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

constexpr Weight operator*(int k, Weight w) { return w * k; }

inline std::ostream& operator<<(std::ostream& os, Weight w) { return os << w.str(); }

inline constexpr Weight kRho{1, 1};
inline constexpr Weight kOmega1{1, 0};
inline constexpr Weight kOmega2{0, 1};

struct WeightHash {
    std::size_t operator()(Weight w) const noexcept {
        auto key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(w.a)) << 32) |
                   static_cast<std::uint32_t>(w.b);
        return std::hash<std::uint64_t>{}(key * 0x9E3779B97F4A7C15ULL);
    }
};

// Highest first by (a+b, a). Linear extension of the dominance order for
// both systems (alpha1 has a+b = 0 in B2 but a = 2 > 0).
struct PeelOrder {
    constexpr bool operator()(Weight x, Weight y) const {
        if (x.a + x.b != y.a + y.b) return x.a + x.b > y.a + y.b;
        if (x.a != y.a) return x.a > y.a;
        return x.b > y.b;
    }
};

}  // namespace modtensor
