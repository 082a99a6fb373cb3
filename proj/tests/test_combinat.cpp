#include <umemura/umemura.hpp>

#include <gtest/gtest.h>

using namespace umemura;

TEST(GroundSet, Elements)
{
    EXPECT_EQ(ground_set(3, 2).elements(), (std::vector<int>{1, 2, 3, 5, 7}));
    EXPECT_EQ(ground_set(0, 3).elements(), (std::vector<int>{2, 4, 6}));
    EXPECT_TRUE(ground_set(0, 0).elements().empty());
    EXPECT_THROW(ground_set(-1, 0), std::invalid_argument);
    EXPECT_EQ(ground_set(2, 2).index_of(6), 3);
    EXPECT_EQ(ground_set(2, 2).index_of(5), -1);
}

TEST(Subsets, MembersAndComplement)
{
    const ground_set g(2, 1);
    const std::vector<int> in{1, 4};
    const auto s = index_subset::from_members(g, in);
    EXPECT_EQ(s.members(), in);
    EXPECT_EQ(s.complement().members(), std::vector<int>{2});
    const std::vector<int> bad{3};
    EXPECT_THROW(index_subset::from_members(g, bad), std::invalid_argument);
}

TEST(Coefficients, HandValues)
{
    const ground_set g(2, 1); // {1, 2, 4}
    const std::vector<int> one{1};
    // |(1+2)/(1-2)| |(1+4)/(1-4)| = 3 * 5/3
    EXPECT_EQ(dcoef(index_subset::from_members(g, one)), 5);
    const std::vector<int> four{4};
    EXPECT_EQ(csign_exponent(index_subset::from_members(g, four)), 1);
    EXPECT_EQ(dcoef(index_subset(g, 0)), 1);
}

TEST(Partitions, ConjugateAndFrobenius)
{
    const partition lam({4, 2, 1});
    EXPECT_EQ(lam.conjugate(), partition({3, 2, 1, 1}));
    EXPECT_EQ(lam.conjugate().conjugate(), lam);
    const auto f = partition_to_frobenius(lam);
    EXPECT_EQ(f.arms, (std::vector<int>{3, 0}));
    EXPECT_EQ(f.legs, (std::vector<int>{2, 0}));
    EXPECT_EQ(frobenius_to_partition(f), lam);
    EXPECT_THROW(partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(frobenius_to_partition({{1, 2}, {0, 1}}), invalid_symbol);
}

TEST(Partitions, LambdaOfSubset)
{
    // {2} -> (2 | 1) = (3, 1)
    EXPECT_EQ(lambda_of_subset({2}, 3), partition({3, 1}));
    EXPECT_EQ(lambda_of_subset({}, 3), partition());
    EXPECT_THROW(lambda_of_subset({3}, 3), std::invalid_argument);
}

TEST(GlDim, KnownValues)
{
    EXPECT_EQ(gl_dim(3, partition({1})), 3);
    EXPECT_EQ(gl_dim(3, partition({2, 1})), 8);
    EXPECT_EQ(gl_dim(4, partition({1, 1})), 6);
    EXPECT_EQ(gl_dim(0, partition()), 1);
    EXPECT_THROW(gl_dim(1, partition({1, 1})), too_many_parts);
}
