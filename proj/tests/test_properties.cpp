#include "property_support.hpp"

#include <gtest/gtest.h>

namespace
{

constexpr std::uint32_t seed = props::default_seed;

TEST(Properties, RingAxioms) { EXPECT_EQ(props::ring_axioms(seed), ""); }
TEST(Properties, LeibnizRuleForDelta) { EXPECT_EQ(props::leibniz(seed + 1), ""); }
TEST(Properties, HirotaSymmetry) { EXPECT_EQ(props::hirota_symmetry(seed + 2), ""); }
TEST(Properties, HirotaBilinearity) { EXPECT_EQ(props::hirota_bilinearity(seed + 3), ""); }
TEST(Properties, HirotaBranchInvariance) { EXPECT_EQ(props::hirota_branch_invariance(seed + 4), ""); }
TEST(Properties, ReduceIdempotence) { EXPECT_EQ(props::reduce_idempotence(seed + 5), ""); }
TEST(Properties, DcoefComplementSymmetry) { EXPECT_EQ(props::dcoef_complement_symmetry(), ""); }
TEST(Properties, GlDimCountsTableaux) { EXPECT_EQ(props::gl_dim_matches_ssyt(), ""); }

TEST(Properties, SsytCounterSanity)
{
    EXPECT_EQ(props::ssyt_count({1}, 3), 3);
    EXPECT_EQ(props::ssyt_count({2}, 2), 3);
    EXPECT_EQ(props::ssyt_count({1, 1}, 2), 1);
    EXPECT_EQ(props::ssyt_count({}, 4), 1);
}

TEST(Properties, CanonicalTextRoundTripRandom)
{
    std::mt19937 rng(seed + 6);
    for (int i = 0; i < 200; ++i) {
        const auto p = props::random_poly(rng, 8, 6);
        EXPECT_EQ(umemura::parse_polynomial<umemura::zwab_vars>(umemura::to_canonical_text(p)), p);
        EXPECT_EQ(umemura::from_json<umemura::zwab_vars>(umemura::to_json(p)), p);
    }
}

} // namespace
