#include "hypersum/document.hpp"

#include <gtest/gtest.h>

using namespace hypersum;

TEST(Text, LevelThreeSixthPowers) {
    EXPECT_EQ(render_text(theorem3_factored(3, 6)), "6!/10! * y*(y+3)*(y+4) * (y^2-2*y-1)");
}

TEST(Text, LevelFiveSeventhPowers) {
    const auto s = render_text(theorem3_factored(5, 7));
    EXPECT_NE(s.find("7*y^3+14*y^2-238*y+295"), std::string::npos) << s;
    EXPECT_NE(s.find("sqrt(4*y+36)"), std::string::npos) << s;
}

TEST(Text, OmitsUnitCore) {
    EXPECT_EQ(render_text(theorem3_factored(0, 1)), "1!/2! * y");
}

TEST(Latex, RadicalOnlyForOddA) {
    const auto odd = render_latex(theorem3_factored(10, 6));
    EXPECT_NE(odd.find("\\sqrt{4y+121}"), std::string::npos) << odd;
    EXPECT_NE(odd.find("\\frac{6!}{17!}"), std::string::npos) << odd;
    const auto even = render_latex(theorem3_factored(3, 6));
    EXPECT_EQ(even.find("\\sqrt"), std::string::npos) << even;
    EXPECT_NE(even.find("(4y+16)"), std::string::npos) << even;
}

TEST(Json, SimplestDocument) {
    const auto j = to_document(theorem3_factored(0, 1));
    EXPECT_EQ(j.at("A"), 0);
    EXPECT_EQ(j.at("linear_offsets"), Json::array({0}));
    EXPECT_EQ(j.at("core_coeffs"), Json::array({"1"}));
    EXPECT_EQ(j.at("prefactor").at("num"), "1");
}

TEST(Json, NumbersAreStrings) {
    const auto j = to_document(theorem3_factored(10, 6));
    EXPECT_TRUE(j.at("prefactor").at("den").is_string());
    EXPECT_TRUE(j.at("core_scale").at("num").is_string());
    for (const auto& c : j.at("core_coeffs")) EXPECT_TRUE(c.is_string());
}

TEST(Json, RoundTripOverGrid) {
    for (int level = 0; level <= 6; ++level)
        for (long k = 1; k <= 10; ++k) {
            const auto f = theorem3_factored(level, k);
            const auto back = parse_document(to_document(f).dump());
            EXPECT_EQ(back, f);
            for (long n = 1; n <= 10; ++n) EXPECT_EQ(back.eval_at_N(Rat(n)), f.eval_at_N(Rat(n)));
        }
}

TEST(Json, RejectsMalformed) {
    EXPECT_THROW(parse_document("{"), std::invalid_argument);
    EXPECT_THROW(parse_document("{\"L\": 1}"), std::invalid_argument);
    auto j = to_document(theorem3_factored(2, 3));
    j["A"] = 2;
    EXPECT_THROW(from_document(j), std::invalid_argument);
}
