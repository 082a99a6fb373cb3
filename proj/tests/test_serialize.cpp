#include <umemura/umemura.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace umemura;

TEST(CanonicalText, OrderAndFormat)
{
    const auto p = z_var() * w_var() * rational(3, 2) + a_var() * rational(-1) + mpoly(rational(2)) + z_var().pow(2);
    EXPECT_EQ(to_canonical_text(p), "2 + -1*a + 3/2*z*w + 1*z^2");
    EXPECT_EQ(to_canonical_text(mpoly()), "0");
}

TEST(CanonicalText, RoundTripsFamilies)
{
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; m <= 2; ++m) {
            for (int k = 0; k <= n; ++k) {
                const auto u = u_gen(n, m, k);
                EXPECT_EQ(parse_polynomial<zwab_vars>(to_canonical_text(u)), u) << n << " " << m << " " << k;
                EXPECT_EQ(from_json<zwab_vars>(to_json(u)), u);
            }
        }
    }
}

TEST(Parse, LooseSyntax)
{
    EXPECT_EQ(parse_polynomial<zwab_vars>("z^2 - 3/4 * w*z + 1"), z_var().pow(2) - z_var() * w_var() * rational(3, 4) + mpoly(1));
    EXPECT_EQ(parse_polynomial<zwab_vars>("z*z*a"), z_var() * z_var() * a_var());
    EXPECT_EQ(parse_polynomial<zwab_vars>("-2*b + -1*a"), -(b_var() * rational(2)) - a_var());
    EXPECT_EQ(parse_polynomial<toda_vars>("B1*v + 1/2*B2"), toda_poly::variable(1) * toda_poly::variable(0) + toda_poly::variable(2) * rational(1, 2));
}

TEST(Parse, RejectsMalformedInput)
{
    EXPECT_THROW(parse_polynomial<zwab_vars>(""), parse_error);
    EXPECT_THROW(parse_polynomial<zwab_vars>("z +"), parse_error);
    EXPECT_THROW(parse_polynomial<zwab_vars>("x^2"), parse_error);
    EXPECT_THROW(parse_polynomial<zwab_vars>("1/ z"), parse_error);
    EXPECT_THROW(parse_polynomial<zwab_vars>("z^"), parse_error);
    EXPECT_THROW(from_json<zwab_vars>(nlohmann::json::parse(R"([{"coeff":"1","exps":[1,2]}])")), parse_error);
    EXPECT_THROW(from_json<zwab_vars>(nlohmann::json::parse(R"([{"coeff":"1/0","exps":[0,0,0,0]}])")), parse_error);
}

TEST(Json, TermShape)
{
    const auto j = to_json(z_var() * rational(-1, 3));
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["coeff"], "-1/3");
    EXPECT_EQ(j[0]["exps"], nlohmann::json({1, 0, 0, 0}));
}

TEST(Latex, ParameterProductsAreOverlined)
{
    const auto s = u_gen_latex(1, 1, 1);
    EXPECT_NE(s.find("\\overline{a}_{1}\\overline{a}_{3}"), std::string::npos) << s;
    EXPECT_NE(s.find("\\overline{b}_{1}\\overline{b}_{3}"), std::string::npos) << s;
    EXPECT_EQ(to_latex(z_var().pow(2) * rational(1, 2) - w_var()), "-w + \\frac{1}{2}z^{2}");
}

// Golden polynomials written by tests/oracle/u_gen_oracle.py (sympy).
TEST(Golden, SubsetSumMatchesOracle)
{
    namespace fs = std::filesystem;
    int seen = 0;
    for (const auto &entry : fs::directory_iterator(GOLDEN_DIR)) {
        const auto name = entry.path().stem().string();
        int n = 0, m = 0, k = 0;
        ASSERT_EQ(std::sscanf(name.c_str(), "u_gen_%d_%d_%d", &n, &m, &k), 3) << name;
        std::ifstream f(entry.path());
        std::stringstream ss;
        ss << f.rdbuf();
        std::string text = ss.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) {
            text.pop_back();
        }
        EXPECT_EQ(u_gen(n, m, k), parse_polynomial<zwab_vars>(text)) << name;
        ++seen;
    }
    EXPECT_GE(seen, 40);
}
