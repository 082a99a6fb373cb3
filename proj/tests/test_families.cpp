#include <umemura/umemura.hpp>

#include <gtest/gtest.h>

using namespace umemura;

TEST(Family, SmallCases)
{
    EXPECT_EQ(u_gen(0, 0, 0), mpoly(1));
    // ground set {2}. I={}: d=1, c=0, b_2 = b+1. I={2}: c=1, a_2 = a+1.
    EXPECT_EQ(u_gen(0, 1, 0), (b_var() + mpoly(1)) * w_var().pow(2) - (a_var() + mpoly(1)) * z_var().pow(2));
    EXPECT_EQ(u_gen(1, 0, 1), mpoly(1));
    EXPECT_EQ(u_gen(1, 0, 0), a_var() * z_var() + b_var() * w_var());
}

TEST(Family, IndexRange)
{
    EXPECT_TRUE(u_gen(1, 2, 2).is_zero());
    EXPECT_THROW(check_k(1, 2, 2), invalid_k);
    EXPECT_THROW(check_k(-1, 0, 0), invalid_k);
    EXPECT_THROW(u_gen(2, -1, 0), invalid_k);
    EXPECT_NO_THROW(check_k(3, 0, 3));
}

TEST(Family, SeedRow)
{
    EXPECT_EQ(u_nm(0, -1), mpoly(1));
    EXPECT_EQ(u_nm(3, -1), u_gen(2, 0, 0));
    EXPECT_EQ(u_nm(2, 1), u_gen(2, 1, 0));
    EXPECT_THROW(u_nm(1, -2), invalid_k);
}

TEST(Family, PrefactorOrientationsDifferBySign)
{
    for (int n = 1; n <= 3; ++n) {
        for (int m = 0; m <= 2; ++m) {
            for (int k = 0; k <= n; ++k) {
                const auto a = detail::u_gen_terms(n, m, k, prefactor_sign::j_minus_i);
                const auto b = detail::u_gen_terms(n, m, k, prefactor_sign::i_minus_j);
                ASSERT_EQ(a.size(), b.size());
                for (std::size_t i = 0; i < a.size(); ++i) {
                    const bool odd = (k * a[i].a_indices.size()) % 2 == 1;
                    EXPECT_EQ(a[i].coeff, odd ? -b[i].coeff : b[i].coeff);
                }
            }
        }
    }
}

TEST(Family, EqualParameterFactorization)
{
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; m <= 3; ++m) {
            const auto lhs = set_b_equal_a(u_gen(n, m, 0));
            const auto rhs = x_factored(n, m);
            EXPECT_TRUE(lhs == rhs || lhs == -rhs) << n << " " << m;
        }
    }
}

TEST(Family, DeterminantVariantReproducesSubsetSum)
{
    det_variant v{true, true, true, true};
    ASSERT_EQ(v.name(), "c-as-sign+c-zero-low+swap-ab+k-parity");
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; n + 2 * m <= 4; ++m) {
            for (int k = 0; k <= n; ++k) {
                EXPECT_EQ(u_gen_det(n, m, k, v), u_gen(n, m, k)) << n << " " << m << " " << k;
            }
        }
    }
    EXPECT_EQ(det_variant::all().size(), 16u);
    EXPECT_EQ(det_variant::all().front().name(), "plain");
}

TEST(Family, BareissOnIntegers)
{
    std::vector<std::vector<mpoly>> m{{mpoly(2), mpoly(1), mpoly(3)}, {mpoly(0), mpoly(4), mpoly(1)}, {mpoly(5), mpoly(2), mpoly(0)}};
    // 2(0-2) - 1(0-5) + 3(0-20) = -59
    EXPECT_EQ(bareiss_determinant(m), mpoly(-59));
}

TEST(Toda, FirstTerms)
{
    const auto t = t_toda_sequence(4);
    ASSERT_EQ(t.size(), 4u);
    EXPECT_EQ(t[0], toda_poly(1));
    EXPECT_EQ(t[1], toda_poly(1));
    EXPECT_EQ(to_canonical_text(t[2]), "1/4 + -1/2*B2 + -1/2*B1 + -1/4*v*B2 + 1/4*v*B1");
    EXPECT_EQ(t_toda(3), t[3]);
    EXPECT_THROW(t_toda(-1), std::invalid_argument);
}

TEST(DimensionSum, Basics)
{
    EXPECT_EQ(u_dimension_sum(1, dim_convention::gl_n), mpoly(1));
    EXPECT_THROW(u_dimension_sum(0, dim_convention::gl_n), std::invalid_argument);
    // n = 2: subsets of {1}; both group conventions agree on degree
    const auto p = u_dimension_sum(2, dim_convention::gl_n_minus_1);
    EXPECT_EQ(p.total_degree(std::array<bool, 4>{true, true, false, false}), 1u);
}
