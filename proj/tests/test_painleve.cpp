#include <umemura/umemura.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace umemura;

TEST(EvalPoint, HalfAngleCoordinates)
{
    for (real t : {real(1.25L), real(2), real(7.5L)}) {
        const auto e = make_eval_point(t);
        EXPECT_NEAR(static_cast<double>(e.w * e.w - e.z * e.z), 1.0, 1e-15);
        EXPECT_NEAR(static_cast<double>(4 * e.w * e.w), static_cast<double>(e.v + 2), 1e-14);
        EXPECT_GT(e.z, 0);
        // t(t-1) dx/dt against a difference quotient of x
        const real h = real(1e-6L);
        const real dx = (make_eval_point(t + h).x - make_eval_point(t - h).x) / (2 * h);
        EXPECT_NEAR(static_cast<double>(t * (t - 1) * dx), static_cast<double>(e.chain), 1e-8);
    }
}

TEST(EvalPoint, FullAngleCoordinates)
{
    const auto e = make_eval_point(3, parametrization::full_angle);
    EXPECT_NEAR(static_cast<double>(e.w * e.w - e.z * e.z), 1.0, 1e-15);
    EXPECT_NEAR(static_cast<double>(2 * e.w), static_cast<double>(e.v), 1e-15);
    EXPECT_EQ(e.chain, -1);
}

TEST(EvalPoint, RejectsOtherBranches)
{
    EXPECT_THROW(make_eval_point(1), branch_domain);
    EXPECT_THROW(make_eval_point(real(0.5L)), branch_domain);
    EXPECT_THROW(make_eval_point(-2), branch_domain);
}

TEST(ExactRational, DyadicValues)
{
    EXPECT_EQ(exact_rational(real(0.75L)), rational(3, 4));
    EXPECT_EQ(exact_rational(-3), rational(-3));
    EXPECT_EQ(exact_rational(0), rational(0));
    EXPECT_EQ(exact_rational(std::ldexp(real(1), -70)).den(), big_int(big_int(1) << 70));
}

TEST(Okamoto, OneRowClosedForm)
{
    for (int m = 0; m <= 3; ++m) {
        const real b2 = m + 1;
        const hnm_function h(1, m, 0, b2);
        for (real t : {real(1.5L), real(2), real(3)}) {
            EXPECT_NEAR(static_cast<double>(h(t)), static_cast<double>(-(2 * t - 1) * b2 * b2 / 2), 1e-12);
        }
    }
}

TEST(Okamoto, ZeroRowSatisfiesEquation)
{
    const hnm_function h(0, 2, real(0.3L), real(0.2L));
    const b_vector b{real(0.3L), real(0.2L), real(2.5L), 0};
    for (real t : {real(1.5L), real(2), real(3)}) {
        EXPECT_LT(evi_residual(h, b, t, true), 1e-6);
        // the linear bracket is a different equation
        EXPECT_GT(evi_residual(h, b, t, false), 1e-4);
    }
}

TEST(Okamoto, DegenerateParametersUseTheLimit)
{
    // U(1,0) = a z + b w vanishes identically at a = b = 0
    const hnm_function h(1, 0, 0, 0);
    EXPECT_TRUE(h.is_limit());
    const b_vector b{0, 0, real(0.5L), 1};
    EXPECT_LT(evi_sides(h, b, 2, true).relative(), 1e-9);
}

TEST(Stencil, FourthOrder)
{
    const hnm_function h(0, 1, real(0.3L), real(0.2L));
    const b_vector b{real(0.3L), real(0.2L), real(1.5L), 0};
    const real coarse = evi_residual(h, b, 2, true, real(1e-2L));
    const real fine = evi_residual(h, b, 2, true, real(5e-3L));
    EXPECT_NEAR(static_cast<double>(coarse / fine), 16.0, 1.0);
}

TEST(Seed, ScaledFormSolvesTheHamiltonianSystem)
{
    for (real t : {real(1.5L), real(2), real(3)}) {
        const auto r = check_hamiltonian_seed(seed_formula::scaled, real(0.3L), real(0.2L), t);
        EXPECT_LT(r.dq, 1e-9);
        EXPECT_LT(r.dp, 1e-9);
        const auto u = check_hamiltonian_seed(seed_formula::unscaled_real, real(0.3L), real(0.2L), t);
        EXPECT_GT(u.dq + u.dp, 1e-3);
    }
    // the check notices a perturbed momentum
    const auto off = check_hamiltonian_seed(seed_formula::scaled, real(0.3L), real(0.2L), 2, 0, real(1e-3L));
    EXPECT_GT(off.dq, 1e-6);
}

TEST(Seed, HamiltonianOffsetIsLinearInT)
{
    const b_vector b{real(0.3L), real(0.2L), real(-0.5L), 0};
    auto h = [](seed_offset o) { return real_function([o](real s) { return seed_h(seed_formula::scaled, o, real(0.3L), real(0.2L), s); }); };
    EXPECT_LT(evi_residual(h(seed_offset::linear), b, 2, true), 1e-9);
    EXPECT_GT(evi_residual(h(seed_offset::constant), b, 2, true), 1e-5);
    EXPECT_GT(evi_residual(h(seed_offset::none), b, 2, true), 1e-5);
}

TEST(Seed, SingularSamples)
{
    EXPECT_THROW(seed_pair(seed_formula::scaled, 0, 0, 2), singular_sample);
    EXPECT_THROW(seed_pair(seed_formula::scaled, 1, 1, 2), singular_sample); // q0 = 1
}

TEST(Pvi, AlgebraicSolutionCheck)
{
    // q = sqrt(t) solves P_VI for (alpha, beta, gamma, delta) = (1/8, -1/8, 1/8, 3/8)
    const real_function q = [](real s) { return std::sqrt(s); };
    EXPECT_LT(pvi_residual(q, {real(0.125L), real(-0.125L), real(0.125L), real(0.375L)}, 2), 1e-8);
    EXPECT_GT(pvi_residual(q, {1, 0, 0, 0}, 2), 1e-3);
}

TEST(Qm, IsNotASolutionOfEitherEquation)
{
    const qm_function q(1, real(0.3L), real(0.2L));
    const real k = real(1.5L);
    EXPECT_GT(pvi_residual(q, pvi_params::from({real(0.3L), real(0.2L), k, 0}), 2), 1e-3);
    EXPECT_GT(pvi_residual(q, pvi_params::from({real(0.3L), real(0.2L), 0, k}), 2), 1e-3);
}

TEST(ResidualTable, RowShape)
{
    residual_request rq;
    rq.m = 1;
    const auto rows = residual_table("h-zero-n", rq);
    ASSERT_EQ(rows.size(), 3u);
    const auto j = rows[0].to_json();
    for (const char *key : {"case", "b_vector", "t", "residual_printed_bracket", "residual_squared_bracket"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["b_vector"].size(), 4u);
    rq.ts = {2, real(0.5L)};
    EXPECT_THROW(residual_table("h-zero-n", rq), branch_domain);
    EXPECT_THROW(residual_table("nope", residual_request{}), std::invalid_argument);
}

TEST(ResidualTable, SingularSetupIsReportedPerRow)
{
    residual_request rq;
    rq.b1 = 1;
    rq.b2 = 1;
    const auto rows = residual_table("seed", rq);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_FALSE(rows[0].error.empty());
}
