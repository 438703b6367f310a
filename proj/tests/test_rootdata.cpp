#include <gtest/gtest.h>

#include "modtensor/modtensor.hpp"
#include "test_support.hpp"

namespace mt = modtensor;
using mt::RootDatum;
using mt::RootSystemId;
using mt::Weight;

namespace {

const RootDatum& a2() { return RootDatum::get(RootSystemId::A2); }
const RootDatum& b2() { return RootDatum::get(RootSystemId::B2); }

TEST(RootData, ParseSystem) {
    EXPECT_EQ(mt::parse_system("a2"), RootSystemId::A2);
    EXPECT_EQ(mt::parse_system("B2"), RootSystemId::B2);
    EXPECT_THROW(mt::parse_system("g2"), mt::DomainError);
}

TEST(RootData, Pairings) {
    EXPECT_EQ(a2().pair({1, 1}, a2().highest_root()), 2);
    EXPECT_EQ(b2().pair({2, 0}, b2().highest_short_root()), 4);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) EXPECT_EQ(b2().pair({a, b}, b2().highest_root()), a + b);
    EXPECT_THROW(a2().pair({1, 1}, 7), std::out_of_range);
}

TEST(RootData, Reflections) {
    EXPECT_EQ(a2().reflect({1, 0}, 0), (Weight{-1, 1}));
    EXPECT_EQ(b2().reflect({0, 1}, 1), (Weight{1, -1}));
    EXPECT_EQ(a2().reflect({1, 1}, 2), (Weight{-1, -1}));
}

TEST(RootData, FiniteOrbits) {
    auto orbit = [](const RootDatum& d, Weight w) {
        std::set<Weight> s;
        for (const auto& [x, i] : d.finite_orbit(w)) s.insert(x);
        return s;
    };
    EXPECT_EQ(orbit(a2(), {2, 3}),
              (std::set<Weight>{{2, 3}, {-2, 5}, {5, -3}, {-5, 2}, {3, -5}, {-3, -2}}));
    EXPECT_EQ(orbit(b2(), {0, 0}).size(), 1u);
    EXPECT_EQ(orbit(b2(), {1, 1}).size(), 8u);
    EXPECT_EQ(orbit(b2(), {0, 1}), (std::set<Weight>{{0, 1}, {1, -1}, {-1, 1}, {0, -1}}));
}

TEST(RootData, RootCoordinates) {
    using R = mt::Rational;
    EXPECT_EQ(a2().root_coordinates({1, 1}), std::make_pair(R(1), R(1)));
    EXPECT_EQ(b2().root_coordinates({1, 0}), std::make_pair(R(1), R(1)));
    EXPECT_EQ(b2().root_coordinates({0, 2}), std::make_pair(R(1), R(2)));
    EXPECT_EQ(b2().root_coordinates({0, 1}), std::make_pair(R(1, 2), R(1)));
}

TEST(RootData, DominanceOrder) {
    EXPECT_TRUE(a2().leq({0, 0}, {1, 1}));
    EXPECT_FALSE(b2().leq({0, 0}, {0, 1}));
    EXPECT_FALSE(a2().leq({2, 0}, {0, 1}));
    EXPECT_TRUE(b2().leq({0, 0}, {1, 0}));
}

TEST(RootData, WeylGroupsHaveExpectedShape) {
    EXPECT_EQ(a2().finite_weyl().size(), 6u);
    EXPECT_EQ(b2().finite_weyl().size(), 8u);
    EXPECT_EQ(a2().longest_element().length, 3);
    EXPECT_EQ(b2().longest_element().length, 4);
    EXPECT_EQ(b2().longest_element().label, "utut");
    EXPECT_EQ(a2().coxeter_number(), 3);
    EXPECT_EQ(b2().coxeter_number(), 4);
}

class WeylGroupProperty : public ::testing::TestWithParam<RootSystemId> {};

TEST_P(WeylGroupProperty, InverseAndDeterminantSign) {
    const auto& d = RootDatum::get(GetParam());
    for (const auto& w : d.finite_weyl()) {
        const int det = w.action.det();
        EXPECT_EQ(det, (w.length % 2 == 0) ? 1 : -1) << w.label;
        bool has_inverse = false;
        for (const auto& v : d.finite_weyl()) has_inverse = has_inverse || (w.action * v.action == mt::Matrix2{});
        EXPECT_TRUE(has_inverse) << w.label;
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b) {
                const Weight x{a, b};
                EXPECT_EQ(d.form(w.action.apply(x), w.action.apply(x)), d.form(x, x));
            }
    }
}

TEST_P(WeylGroupProperty, DominantRepresentativeIsInOrbit) {
    const auto& d = RootDatum::get(GetParam());
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            const Weight rep = d.dominant_representative({a, b});
            EXPECT_TRUE(rep.dominant());
            bool found = false;
            for (const auto& [x, i] : d.finite_orbit({a, b})) found = found || x == rep;
            EXPECT_TRUE(found);
        }
}

INSTANTIATE_TEST_SUITE_P(Systems, WeylGroupProperty, ::testing::Values(RootSystemId::A2, RootSystemId::B2), SystemName());

TEST(RootData, DualWeights) {
    EXPECT_EQ(a2().dual({3, 1}), (Weight{1, 3}));
    EXPECT_EQ(b2().dual({3, 1}), (Weight{3, 1}));
}

TEST(Weight, PeelOrderPutsHighestFirst) {
    mt::PeelOrder less;
    EXPECT_TRUE(less({2, 2}, {1, 1}));
    EXPECT_TRUE(less({3, 0}, {0, 3}));
    EXPECT_FALSE(less({0, 0}, {0, 0}));
}

}  // namespace
