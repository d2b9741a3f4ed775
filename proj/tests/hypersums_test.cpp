#include "hypersum/fixtures.hpp"
#include "hypersum/hypersums.hpp"
#include "hypersum/oracles.hpp"
#include "hypersum/power_sums.hpp"

#include <gtest/gtest.h>

using namespace hypersum;

TEST(XVariable, Relation) {
    for (int level = 0; level <= 5; ++level)
        for (long n = -4; n <= 6; ++n) {
            const XVariable v(level, Rat(n));
            EXPECT_EQ(v.x * v.x, 4 * v.y + Rat((level + 1) * (level + 1)));
        }
}

TEST(Theorem2, Examples) {
    EXPECT_EQ(theorem2_eval(0, 2, Rat(3)), 14);
    EXPECT_EQ(theorem2_eval(1, 1, Rat(3)), 10);
    EXPECT_EQ(theorem2_eval(0, 0, Rat(4)), 4);
    EXPECT_EQ(theorem2_eval(3, 0, Rat(5)), Rat(oracle::hypersum_brute(3, 0, 5)));
    EXPECT_THROW(theorem2_eval(-1, 2, Rat(1)), std::invalid_argument);
}

TEST(Theorem2, AllFamiliesMatchBrute) {
    for (int level = 0; level <= 8; ++level)
        for (long k = 0; k <= 12; ++k)
            for (long n = 0; n <= 8; ++n)
                ASSERT_EQ(theorem2_eval(level, k, Rat(n)), Rat(oracle::hypersum_brute(level, k, n)))
                    << level << " " << k << " " << n;
}

TEST(Theorem3, SmallCases) {
    const auto f = theorem3_factored(0, 1);
    EXPECT_EQ(f.sqrt_exponent, 0);
    EXPECT_EQ(f.linear_offsets, std::vector<long>{0});
    EXPECT_EQ(f.core.poly(), Poly(Rat(1)));
    EXPECT_EQ(f.eval_at_N(Rat(4)), 10);
    EXPECT_THROW(theorem3_factored(0, 0), std::invalid_argument);
    EXPECT_THROW(theorem3_factored(-1, 2), std::invalid_argument);
}

TEST(Theorem3, ExampleCores) {
    EXPECT_EQ(theorem3_factored(3, 6).core.poly(), (Poly{Rat(-1), Rat(-2), Rat(1)}));
    EXPECT_EQ(theorem3_factored(5, 7).core.poly(), (Poly{Rat(295), Rat(-238), Rat(14), Rat(7)}));
    EXPECT_EQ(theorem3_factored(10, 6).core.poly(), (Poly{Rat(-220), Rat(22), Rat(3)}));
}

TEST(Theorem3, ParametersAndPrefactor) {
    const auto f = theorem3_factored(10, 6);
    EXPECT_EQ(f.n, 3);
    EXPECT_EQ(f.m, 13);
    EXPECT_EQ(f.sqrt_exponent, 1);
    EXPECT_EQ(f.prefactor, make_rat(factorial(6), factorial(17) * 32));
    EXPECT_EQ(f.linear_offsets, (std::vector<long>{0, 10, 18, 24, 28, 30}));
    const auto g = theorem3_factored(3, 6);
    EXPECT_EQ(g.sqrt_exponent, 2);
    EXPECT_EQ(g.linear_offsets, (std::vector<long>{0, 3}));
}

TEST(Theorem3, CoreIsPrimitiveWithPositiveLead) {
    for (int level = 0; level <= 8; ++level)
        for (long k = 1; k <= 12; ++k) {
            const auto f = theorem3_factored(level, k);
            EXPECT_GT(f.core.poly().leading(), 0);
            EXPECT_EQ(signed_content(f.core.poly()), 1);
            EXPECT_FALSE(f.degenerate_core);
            EXPECT_EQ(f.core.poly().degree(), f.n - 1);
        }
}

TEST(Theorem3, GridAgainstOracles) {
    for (int level = 0; level <= 8; ++level)
        for (long k = 1; k <= 12; ++k) {
            const auto f = theorem3_factored(level, k);
            for (long n = 1; n <= 20; ++n)
                ASSERT_EQ(f.eval_at_N(Rat(n)), Rat(oracle::hypersum_brute(level, k, n))) << level << " " << k << " " << n;
        }
}

TEST(Theorem3, PartialSumsClimbALevel) {
    for (int level = 0; level <= 5; ++level)
        for (long k = 1; k <= 8; ++k) {
            const auto f = theorem3_factored(level, k), up = theorem3_factored(level + 1, k);
            Rat acc = 0;
            for (long n = 1; n <= 10; ++n) {
                acc += f.eval_at_N(Rat(n));
                EXPECT_EQ(up.eval_at_N(Rat(n)), acc);
            }
        }
}

TEST(Prop1, MatchesDirectDeterminant) {
    for (int level = 0; level <= 8; ++level)
        for (long k = 1; k <= 12; ++k) EXPECT_EQ(delta_from_prop1(level, k), delta_direct(level, k)) << level << " " << k;
    EXPECT_EQ(prop1_coeffs(3, 6).size(), 3u);
}

TEST(K0, Reduction) {
    EXPECT_EQ(hypersum_k0(0, Rat(7)), 7);
    for (int level = 1; level <= 5; ++level)
        for (long n = 0; n <= 8; ++n) EXPECT_EQ(hypersum_k0(level, Rat(n)), Rat(oracle::hypersum_brute(level, 0, n)));
    EXPECT_THROW(hypersum_k0(-1, Rat(1)), std::invalid_argument);
}

TEST(ExpandInN, ZerosLeadingAndDegree) {
    for (int level = 0; level <= 6; ++level)
        for (long k = 1; k <= 8; ++k) {
            const auto c = expand_in_N(theorem3_factored(level, k));
            const Poly p(c);
            EXPECT_EQ(p.degree(), level + k + 1);
            EXPECT_EQ(p.leading(), make_rat(factorial(k), factorial(level + k + 1)));
            for (long n = 0; n >= -level - 1; --n) EXPECT_EQ(p(Rat(n)), 0);
        }
}

TEST(ExpandInN, LevelTenSixthPowerCoefficients) {
    const auto c = expand_in_N(theorem3_factored(10, 6));
    for (const auto& term : fixtures::s6_level10_expansion())
        EXPECT_EQ(c.at(static_cast<std::size_t>(term.power)),
                  Rat(Int(std::to_string(term.value))) * fixtures::s6_level10_expansion_unit());
}
