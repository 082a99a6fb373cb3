#include <umemura/umemura.hpp>

#include <gtest/gtest.h>

using namespace umemura;

namespace
{

const convention_resolution &resolution()
{
    static const convention_resolution r = resolve_conventions();
    return r;
}

} // namespace

TEST(Resolve, DeclaredSpaceHasMinimalCounterexample)
{
    const auto &r = resolution();
    EXPECT_FALSE(r.resolved);
    EXPECT_EQ(r.counterexample_index, 2);
    ASSERT_TRUE(r.closest.has_value());
    EXPECT_FALSE(r.closest_mismatches.empty());
    EXPECT_FALSE(r.pairwise_toda_explicit.empty());
}

TEST(Resolve, SecondTermFactorTwo)
{
    const auto &r = resolution();
    EXPECT_EQ(to_canonical_text(r.recurrence_t2), "1/4 + -1/2*B2 + -1/2*B1 + -1/4*v*B2 + 1/4*v*B1");
    ASSERT_FALSE(r.t2_readings.empty());
    const auto &sum = r.t2_readings.front();
    ASSERT_TRUE(sum.ratio_to_recurrence.has_value());
    EXPECT_EQ(*sum.ratio_to_recurrence, rational(2));
    EXPECT_FALSE(sum.absorbable);
}

TEST(Resolve, ExtendedSearchAndEmpiricalConventions)
{
    const auto &r = resolution();
    ASSERT_TRUE(r.extended_assignment.has_value());
    EXPECT_EQ(r.extended_assignment->subset_sum_map, variable_map::affine_negated);
    EXPECT_EQ(r.determinant_variant, "c-as-sign+c-zero-low+swap-ab+k-parity");
    EXPECT_TRUE(r.equal_parameter_sign_law_holds);
    EXPECT_EQ(r.coefficient_denominator, 1);
}

TEST(Resolve, Deterministic)
{
    EXPECT_EQ(resolve_conventions().to_json().dump(), resolution().to_json().dump());
}
