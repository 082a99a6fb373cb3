#include <umemura/umemura.hpp>

#include <gtest/gtest.h>

using namespace umemura;

TEST(Rational, NormalizesAndParses)
{
    EXPECT_EQ(rational(6, 4), rational(3, 2));
    EXPECT_EQ(rational(3, -6).to_string(), "-1/2");
    EXPECT_EQ(rational(10, 5).to_string(), "2");
    EXPECT_EQ(rational::parse("-14/21"), rational(-2, 3));
    EXPECT_EQ(rational::parse("7"), rational(7));
    EXPECT_THROW(rational::parse("1/0"), std::domain_error);
    EXPECT_THROW(rational::parse("x"), std::invalid_argument);
}

TEST(Rational, ArithmeticIsExact)
{
    rational s;
    for (int k = 1; k <= 30; ++k) {
        s += rational(1, k * (k + 1));
    }
    EXPECT_EQ(s, rational(30, 31));
    EXPECT_EQ(pow(rational(-2, 3), 3), rational(-8, 27));
    EXPECT_NEAR(static_cast<double>(rational(1, 3).to_long_double()), 1.0 / 3.0, 1e-15);
}

TEST(Rational, DoubleFactorialAndBinomial)
{
    EXPECT_EQ(factorial_odd(0), 1);
    EXPECT_EQ(factorial_odd(3), 105); // 7!!
    EXPECT_EQ(binomial(12, 5), 792);
    EXPECT_EQ(binomial(4, 7), 0);
}

TEST(Mpoly, BasicOperations)
{
    const auto z = z_var(), w = w_var();
    const auto p = (z + w) * (z - w);
    EXPECT_EQ(p, z * z - w * w);
    EXPECT_EQ(p.total_degree(), 2u);
    EXPECT_EQ(p.degree(var::w), 2u);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((z + mpoly(1)).pow(3).coeff({1, 0, 0, 0}), rational(3));
    EXPECT_EQ(p.derivative(var::z), z * rational(2));
}

TEST(Mpoly, EvaluateAndSubstitute)
{
    const auto p = z_var() * z_var() * a_var() + b_var() * rational(1, 2);
    EXPECT_EQ(p.evaluate<long double>({2, 0, 3, 4}), 14.0L);
    EXPECT_EQ(p.evaluate_at(var::a, rational(2)).evaluate_at(var::b, rational(2)), z_var() * z_var() * rational(2) + mpoly(1));
    EXPECT_EQ(p.substitute(var::z, w_var() + mpoly(1)), (w_var() + mpoly(1)).pow(2) * a_var() + b_var() * rational(1, 2));
}

TEST(Mpoly, ExactDivision)
{
    const auto f = z_var() * z_var() - w_var() * w_var();
    const auto g = z_var() - w_var();
    EXPECT_EQ(exact_div(f, g), z_var() + w_var());
    EXPECT_THROW(exact_div(f + mpoly(1), g), not_divisible);
    const auto [q, r] = divide_with_remainder(f + mpoly(1), g);
    EXPECT_EQ(q * g + r, f + mpoly(1));
}

TEST(Upoly, DivisionAndGcd)
{
    const upoly p = upoly::linear(rational(1)) * upoly::linear(rational(-2)); // (x+1)(x-2)
    const upoly q = upoly::linear(rational(1)) * upoly::linear(rational(3));
    EXPECT_EQ(gcd(p, q), upoly::linear(rational(1)));
    const auto [quo, rem] = divmod(p, upoly::linear(rational(-2)));
    EXPECT_EQ(quo, upoly::linear(rational(1)));
    EXPECT_TRUE(rem.is_zero());
    EXPECT_EQ(p(rational(2)), rational(0));
}

TEST(PartialFractions, SingletonWitness)
{
    const auto pf = partial_fractions({2}, {});
    ASSERT_EQ(pf.coefficients.size(), 1u);
    EXPECT_EQ(pf.coefficients.at(2), rational(8));
    EXPECT_TRUE(pf.unique);
    // the decomposition reproduces the twin sum minus 2
    const urat lhs = twin_product_sum({2}, {}) - urat(upoly(2));
    EXPECT_EQ(lhs, pf.excess());
}

TEST(PartialFractions, EmptyPairIsTrivial)
{
    const auto pf = partial_fractions({}, {});
    EXPECT_TRUE(pf.coefficients.empty());
    EXPECT_TRUE(pf.numerator.is_zero());
}
