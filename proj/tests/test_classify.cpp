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

using Row = std::optional<std::string>;

TEST(ClassifyA2, CompleteReducibilityRows) {
    EXPECT_EQ(mt::a2_cr_row(5, {4, 0}, {0, 1}), Row("2"));
    EXPECT_EQ(mt::a2_cr_row(5, {3, 1}, {0, 2}), Row("3"));
    EXPECT_EQ(mt::a2_cr_row(5, {1, 1}, {1, 1}), std::nullopt);
}

TEST(ClassifyA2, MultiplicityFreeRows) {
    EXPECT_EQ(mt::a2_mf_row(5, {2, 0}, {2, 0}), Row("1"));
    // (2,0) is not reflection small for (2,2) at p = 7 (2+2+2 > 5) and [L(2,2) x L(2,0) : L(3,1)] = 2.
    EXPECT_EQ(mt::a2_mf_row(7, {2, 2}, {2, 0}), std::nullopt);
    EXPECT_EQ(mt::a2_mf_row(7, {2, 1}, {2, 0}), Row("4a"));
    EXPECT_EQ(mt::a2_mf_row(5, {3, 1}, {0, 2}), Row("3"));
    EXPECT_EQ(mt::a2_mf_row(7, {1, 1}, {1, 1}), std::nullopt);
}

TEST(ClassifyB2, Rows) {
    EXPECT_EQ(mt::b2_cr_row(5, {2, 0}, {1, 1}), Row("1"));
    EXPECT_EQ(mt::b2_cr_row(5, {4, 0}, {0, 1}), Row("2"));
    EXPECT_EQ(mt::b2_mf_row(5, {2, 0}, {1, 1}), Row("1"));
    EXPECT_EQ(mt::b2_mf_row(5, {4, 0}, {0, 1}), Row("2"));
    for (const auto& m : mt::cr_rows(b2(), 3, {1, 1}, {1, 0})) EXPECT_NE(m.row, "4");
}

TEST(ClassifyB2, CharacteristicZeroRows) {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            bool row3 = false;
            for (const auto& m : mt::stembridge_b2_char0_rows({a, 0}, {0, b})) row3 = row3 || m.row == "3";
            EXPECT_TRUE(row3) << a << " " << b;
        }
    EXPECT_EQ(mt::stembridge_b2_char0_mf({1, 1}, {1, 1}), std::nullopt);
    EXPECT_GE(mt::klimyk_char0(b2(), {1, 1}, {1, 1}).max_coefficient(), 2);
    EXPECT_EQ(mt::stembridge_b2_char0_mf({3, 2}, {0, 1}), Row("1b"));
}

// The characteristic zero table against the Klimyk oracle.
TEST(ClassifyB2, CharacteristicZeroTableMatchesKlimyk) {
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (int c = 0; c <= 5; ++c)
                for (int e = 0; e <= 5; ++e) {
                    const Weight l{a, b}, m{c, e};
                    if (l.is_zero() || m.is_zero()) continue;
                    const bool mf = mt::klimyk_char0(b2(), l, m).max_coefficient() <= 1;
                    EXPECT_EQ(mt::stembridge_b2_char0_mf(l, m).has_value(), mf) << l << " x " << m;
                }
}

TEST(ClassifyVerdict, TrivialAndSteinberg) {
    for (const RootDatum* d : {&a2(), &b2()}) {
        const auto v = mt::verdict(*d, 5, {0, 0}, {3, 2});
        EXPECT_TRUE(v.cr);
        EXPECT_TRUE(v.mf);
    }
    const auto v = mt::verdict(b2(), 5, {4, 0}, {0, 1});
    EXPECT_TRUE(v.cr);
    EXPECT_TRUE(v.mf);

    const auto s = mt::verdict(a2(), 5, {6, 0}, {12, 0});
    const auto r = mt::verdict(a2(), 5, {1, 0}, {2, 0});
    EXPECT_EQ(s.mf, r.mf);
    EXPECT_EQ(s.cr, r.cr);
    EXPECT_EQ(s.mf, mt::is_multiplicity_free_oracle(a2(), 5, {6, 0}, {12, 0}));
    std::set<std::size_t> digits;
    for (const auto& m : s.matched_rows) digits.insert(m.digit);
    EXPECT_EQ(digits, (std::set<std::size_t>{0, 1}));
}

TEST(ClassifyVerdict, RejectsNonDominant) {
    EXPECT_THROW(mt::verdict(a2(), 5, {-1, 0}, {0, 0}), mt::DomainError);
}

// Table MF implies table CR, and the MF table matches the oracle (A2 all primes, B2 away from p=3).
class TableConsistency : public ::testing::TestWithParam<std::tuple<RootSystemId, int>> {};

TEST_P(TableConsistency, MfImpliesCrAndMatchesOracle) {
    const auto& d = RootDatum::get(std::get<0>(GetParam()));
    const int p = std::get<1>(GetParam());
    mt::CharacterTable table(d, p);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int e = 0; e < p; ++e) {
                    const Weight l{a, b}, m{c, e};
                    const auto v = mt::verdict(d, p, l, m);
                    if (v.mf) {
                        EXPECT_TRUE(v.cr) << l << " x " << m;
                    }
                    EXPECT_EQ(v.mf, mt::is_multiplicity_free_oracle(table, l, m)) << l << " x " << m;
                }
}

INSTANTIATE_TEST_SUITE_P(A2, TableConsistency,
                         ::testing::Combine(::testing::Values(RootSystemId::A2), ::testing::Values(2, 3, 5, 7)), SystemPrimeName());
INSTANTIATE_TEST_SUITE_P(B2, TableConsistency,
                         ::testing::Combine(::testing::Values(RootSystemId::B2), ::testing::Values(2, 5, 7)), SystemPrimeName());

// The p = 3 row that disagrees with the computed decomposition; pinned so any change is noticed.
TEST(ClassifyB2, KnownDisagreementAtThree) {
    mt::CharacterTable table(b2(), 3);
    const auto v = mt::verdict(b2(), 3, {0, 2}, {1, 0});
    EXPECT_TRUE(v.mf);
    EXPECT_EQ(mt::tensor_simple_decomposition(table, {0, 2}, {1, 0}),
              (mt::SimpleExpansion{{{1, 2}, 1}, {{0, 2}, 2}, {{1, 0}, 1}}));
    EXPECT_FALSE(mt::weight_space_bound_check(table, {0, 2}, {1, 0}));
}

}  // namespace
