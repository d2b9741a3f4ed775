#include "hypersum/coefficients.hpp"
#include "hypersum/oracles.hpp"

#include <gtest/gtest.h>

using namespace hypersum;

TEST(CTable, FirstValues) {
    const auto t = c_table(6);
    EXPECT_EQ(t.at(0), 1);
    EXPECT_EQ(t.at(1), make_rat(-1, 6));
    EXPECT_EQ(t.at(2), make_rat(7, 360));
    EXPECT_EQ(t.at(3), make_rat(-31, 15120));
    EXPECT_EQ(t.at(4), make_rat(127, 604800));
    EXPECT_EQ(t.at(5), make_rat(-73, 3421440));
    EXPECT_EQ(t.at(6), make_rat(1414477, 653837184000LL));
}

TEST(CTable, OutOfRange) {
    const auto t = c_table(3);
    EXPECT_THROW(t.at(4), std::out_of_range);
    EXPECT_THROW(t.at(-1), std::out_of_range);
    EXPECT_EQ(t.at_or_zero(-1), 0);
    EXPECT_THROW(t.at_or_zero(4), std::out_of_range);
}

TEST(CTable, SignsAlternate) {
    const auto t = c_table(20);
    for (long p = 0; p <= 20; ++p) EXPECT_EQ(t.at(p) < 0, p % 2 == 1) << p;
}

TEST(HyperTable, LevelZeroAndLeading) {
    EXPECT_EQ(c_hyper_table(0, 5), c_table(5));
    for (int level = 0; level <= 6; ++level) EXPECT_EQ(c_hyper_table(level, 0).at(0), 1);
    EXPECT_THROW(c_hyper_table(-1, 3), std::invalid_argument);
    EXPECT_THROW(c_hyper_table(0, -1), std::invalid_argument);
}

TEST(HyperTable, LevelOneClosedForm) {
    // C^(1)_p = (2p-1) C_p / (1 - 2^{1-2p}) for p >= 1
    const auto c0 = c_table(10), c1 = c_hyper_table(1, 10);
    for (long p = 1; p <= 10; ++p) EXPECT_EQ(c1.at(p), Rat(2 * p - 1) * c0.at(p) / (Rat(1) - pow2(1 - 2 * p))) << p;
}

TEST(HyperTable, ConvolutionIsAssociative) {
    const auto c = c_table(8);
    const auto c1 = convolve(c, c, 1);
    EXPECT_EQ(convolve(c1, c, 2), convolve(c, c1, 2));
    EXPECT_EQ(convolve(c1, c, 2), c_hyper_table(2, 8));
}

TEST(Provider, LevelMinusOneIsUnit) {
    const auto t = default_coeffs().table(-1, 3);
    EXPECT_EQ(t.at(0), 1);
    EXPECT_EQ(t.at(3), 0);
}

TEST(Bernoulli, MatchesRecurrence) {
    const auto b = oracle::bernoulli_recurrence(24);
    for (long n = 0; n <= 24; ++n) EXPECT_EQ(bernoulli(n), b[static_cast<std::size_t>(n)]) << n;
    EXPECT_EQ(bernoulli(1), make_rat(-1, 2));
    EXPECT_EQ(bernoulli(12), make_rat(-691, 2730));
    EXPECT_THROW(bernoulli(-2), std::invalid_argument);
}

TEST(Euler, FromInverseOfQ) {
    const auto e = euler_table(3);
    EXPECT_EQ(e[0], 1);
    EXPECT_EQ(e[1], make_rat(-1, 2));   // E_2 / 2!
    EXPECT_EQ(e[2], make_rat(5, 24));   // E_4 / 4!
    EXPECT_EQ(e[3], make_rat(-61, 720));
}

TEST(IdentitySuite, PassesAtSpecBounds) {
    const auto r12 = verify_identity_suite(12, 6);
    for (const auto& res : r12.results) EXPECT_TRUE(res.pass) << res.failure;
}

TEST(IdentitySuite, CorruptionIsReported) {
    const CorruptedCoeffs bad(3, make_rat(1, 1000));
    const auto r = verify_identity_suite(6, 2, bad);
    EXPECT_FALSE(r.all_pass());
    bool found_tuple = false;
    for (const auto& res : r.results)
        if (!res.pass) found_tuple = found_tuple || res.failure.find("p=") != std::string::npos;
    EXPECT_TRUE(found_tuple);
}

TEST(IdentitySuite, RejectsBadBounds) {
    EXPECT_THROW(verify_identity_suite(0, 1), std::invalid_argument);
    EXPECT_THROW(verify_identity_suite(3, -1), std::invalid_argument);
}
