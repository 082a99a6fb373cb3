#ifndef UMEMURA_PAINLEVE_HPP
#define UMEMURA_PAINLEVE_HPP

#include <umemura/calculus.hpp>
#include <umemura/families.hpp>

#include <json.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umemura
{

using real = long double;
using complex_real = std::complex<real>;

class branch_domain : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};
class pole_at_sample : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};
class degenerate_denominator : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};
class singular_sample : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};
class differentiation_failure : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

struct b_vector {
    real b1 = 0, b2 = 0, b3 = 0, b4 = 0;

    [[nodiscard]] nlohmann::json to_json() const
    {
        return {static_cast<double>(b1), static_cast<double>(b2), static_cast<double>(b3), static_cast<double>(b4)};
    }
};

struct pvi_params {
    real alpha = 0, beta = 0, gamma = 0, delta = 0;

    static pvi_params from(const b_vector &b)
    {
        return {(b.b3 - b.b4) * (b.b3 - b.b4) / 2, -(b.b1 + b.b2) * (b.b1 + b.b2) / 2, (b.b1 - b.b2) * (b.b1 - b.b2) / 2,
                -(b.b3 - b.b4) * (b.b3 + b.b4 - 2) / 2};
    }
};

// How t is attached to (z, w). Both satisfy w^2 - z^2 = 1 with z, w > 0.
//   half_angle: z = (sqrt t - sqrt(t-1)) / (2 (t(t-1))^(1/4)), w likewise with +;
//               then w^2 = (v+2)/4 and t(t-1) dx/dt = -1/2.
//   full_angle: w = v/2, z = 1/(2 sqrt(t(t-1))); then t(t-1) dx/dt = -1.
enum class parametrization { half_angle, full_angle };

inline std::string to_string(parametrization p) { return p == parametrization::half_angle ? "half-angle" : "full-angle"; }

struct eval_point {
    real t = 0;
    real x = 0;
    real v = 0;
    real z = 0;
    real w = 0;
    real chain = 0; // t(t-1) dx/dt
};

inline eval_point make_eval_point(real t, parametrization p = parametrization::half_angle)
{
    if (!(t > 1) || !std::isfinite(static_cast<double>(t))) {
        throw branch_domain("evaluation point requires t > 1 (got " + std::to_string(static_cast<double>(t)) + ")");
    }
    eval_point e;
    e.t = t;
    const real s = std::sqrt(t), s1 = std::sqrt(t - 1);
    e.v = std::sqrt(t / (t - 1)) + std::sqrt((t - 1) / t);
    if (p == parametrization::half_angle) {
        const real q = std::sqrt(std::sqrt(t * (t - 1)));
        e.z = (s - s1) / (2 * q);
        e.w = (s + s1) / (2 * q);
        e.x = std::log(t / (t - 1)) / 2;
        e.chain = real(-0.5L);
    } else {
        e.w = e.v / 2;
        e.z = 1 / (2 * std::sqrt(t * (t - 1)));
        e.x = std::log(t / (t - 1));
        e.chain = -1;
    }
    return e;
}

// {b1^2 (sqrt t - sqrt(t-1))^2 + b2^2 (sqrt t + sqrt(t-1))^2} / 4
inline real h0(real b1, real b2, real t)
{
    const real s = std::sqrt(t), s1 = std::sqrt(t - 1);
    return (b1 * b1 * (s - s1) * (s - s1) + b2 * b2 * (s + s1) * (s + s1)) / 4;
}

// Same with sqrt(t+1) in the second term, for comparison only.
inline real h0_plus_one(real b1, real b2, real t)
{
    const real s = std::sqrt(t), s1 = std::sqrt(t - 1), sp = std::sqrt(t + 1);
    return (b1 * b1 * (s - s1) * (s - s1) + b2 * b2 * (s + sp) * (s + sp)) / 4;
}

// Exact value of a long double (every finite one is a dyadic rational).
inline rational exact_rational(real x)
{
    if (!std::isfinite(static_cast<double>(x))) {
        throw std::invalid_argument("exact_rational: non-finite value");
    }
    int e = 0;
    const real mant = std::frexp(x, &e);
    // 64 mantissa bits, split so each half fits an unsigned long
    const real scaled = std::ldexp(mant, 64);
    const bool neg = scaled < 0;
    const real mag = neg ? -scaled : scaled;
    const auto hi = static_cast<unsigned long>(std::floor(std::ldexp(mag, -32)));
    const auto lo = static_cast<unsigned long>(mag - std::ldexp(static_cast<real>(hi), 32));
    big_int num = big_int(hi) * big_int(big_int(1) << 32) + big_int(lo);
    if (neg) {
        num = -num;
    }
    const int shift = e - 64;
    if (shift >= 0) {
        return rational(big_int(num << static_cast<unsigned>(shift)));
    }
    return rational(num, big_int(big_int(1) << static_cast<unsigned>(-shift)));
}

// A family member specialized exactly to a = -4 b1^2, b = -4 b2^2, kept as a
// polynomial in (z, w) together with its x-derivative.
//
// When the member vanishes identically at those parameters and `take_limit`
// is set, it is replaced by the lowest nonvanishing Taylor coefficient in b
// around b0 (then in a, if every b-coefficient vanishes). Logarithmic
// derivatives of the replacement are the limits of the original ones.
class log_derivative_source
{
public:
    log_derivative_source(const mpoly &u, real b1, real b2, bool take_limit = true)
    {
        const rational r1 = exact_rational(b1), r2 = exact_rational(b2);
        const rational a0 = rational(-4) * r1 * r1, b0 = rational(-4) * r2 * r2;
        m_u = u.evaluate_at(var::a, a0).evaluate_at(var::b, b0);
        if (m_u.is_zero() && take_limit) {
            m_u = lowest_taylor(u.evaluate_at(var::a, a0), var::b, b0);
            if (m_u.is_zero()) {
                m_u = lowest_taylor(u.evaluate_at(var::b, b0), var::a, a0);
            }
            m_limit = !m_u.is_zero();
        }
        if (m_u.is_zero()) {
            throw pole_at_sample("family vanishes identically at b1=" + std::to_string(static_cast<double>(b1)) +
                                 ", b2=" + std::to_string(static_cast<double>(b2)));
        }
        m_du = delta(m_u);
    }

    [[nodiscard]] bool is_limit() const { return m_limit; }

    [[nodiscard]] real value(const eval_point &e) const { return m_u.evaluate<real>({e.z, e.w, 0, 0}); }

    // t(t-1) d/dt log U
    [[nodiscard]] real t_log_derivative(const eval_point &e) const
    {
        const std::array<real, 4> at{e.z, e.w, 0, 0};
        const real u = m_u.evaluate<real>(at);
        if (u == 0 || !std::isfinite(static_cast<double>(u))) {
            throw pole_at_sample("family vanishes at t=" + std::to_string(static_cast<double>(e.t)));
        }
        return e.chain * m_du.evaluate<real>(at) / u;
    }

private:
    static mpoly lowest_taylor(mpoly p, std::size_t v, const rational &at)
    {
        while (!p.is_zero()) {
            const mpoly c = p.evaluate_at(v, at);
            if (!c.is_zero()) {
                return c;
            }
            p = p.derivative(v);
        }
        return {};
    }

    mpoly m_u;
    mpoly m_du;
    bool m_limit = false;
};

// h_{n,m}(b1, b2)(t) = t(t-1) d/dt log U(n,m) - h0
class hnm_function
{
public:
    hnm_function(int n, int m, real b1, real b2, parametrization p = parametrization::half_angle)
        : m_src(u_gen(n, m, 0), b1, b2), m_b1(b1), m_b2(b2), m_param(p)
    {
    }

    real operator()(real t) const { return m_src.t_log_derivative(make_eval_point(t, m_param)) - h0(m_b1, m_b2, t); }

    [[nodiscard]] bool is_limit() const { return m_src.is_limit(); }

private:
    log_derivative_source m_src;
    real m_b1, m_b2;
    parametrization m_param;
};

inline real eval_hnm(int n, int m, real b1, real b2, real t, parametrization p = parametrization::half_angle)
{
    return hnm_function(n, m, b1, b2, p)(t);
}

// ---------------------------------------------------------------------------
// Finite differences.

inline real default_step(real t) { return real(1e-5L) * std::max<real>(1, std::fabs(t)); }

template <typename Scalar>
struct derivatives {
    Scalar f, d1, d2;
};

// Fourth-order central stencil.
template <typename Scalar, typename F>
derivatives<Scalar> central_derivatives(const F &f, real t, real step)
{
    const Scalar fm2 = f(t - 2 * step), fm1 = f(t - step), f0 = f(t), f1 = f(t + step), f2 = f(t + 2 * step);
    for (const auto &v : {fm2, fm1, f0, f1, f2}) {
        if (!std::isfinite(static_cast<double>(std::abs(v)))) {
            throw differentiation_failure("non-finite value in the difference stencil at t=" + std::to_string(static_cast<double>(t)));
        }
    }
    const Scalar d1 = (fm2 - real(8) * fm1 + real(8) * f1 - f2) / (real(12) * step);
    const Scalar d2 = (-fm2 + real(16) * fm1 - real(30) * f0 + real(16) * f1 - f2) / (real(12) * step * step);
    return {f0, d1, d2};
}

using real_function = std::function<real(real)>;

struct evi_terms {
    real lhs = 0;
    real rhs = 0;

    [[nodiscard]] real absolute() const { return std::fabs(lhs - rhs); }
    // |LHS - RHS| / max(1, |LHS| + |RHS|); near poles of h both sides are huge
    [[nodiscard]] real relative() const { return absolute() / std::max<real>(1, std::fabs(lhs) + std::fabs(rhs)); }
};

// Both sides of
//   h' (t(t-1) h'')^2 + [h'(2h - (2t-1) h') + b1 b2 b3 b4]^e = prod_k (h' + bk^2)
// with e = 2 (squared) or e = 1 (linear bracket). `offset` is added to h first.
inline evi_terms evi_sides(const real_function &h, const b_vector &b, real t, bool bracket_squared, real step = 0, real offset = 0)
{
    if (step == 0) {
        step = default_step(t);
    }
    const auto d = central_derivatives<real>([&](real s) { return h(s) + offset; }, t, step);
    const real tt = t * (t - 1) * d.d2;
    const real inner = d.d1 * (2 * d.f - (2 * t - 1) * d.d1) + b.b1 * b.b2 * b.b3 * b.b4;
    const real lhs = d.d1 * tt * tt + (bracket_squared ? inner * inner : inner);
    const real rhs = (d.d1 + b.b1 * b.b1) * (d.d1 + b.b2 * b.b2) * (d.d1 + b.b3 * b.b3) * (d.d1 + b.b4 * b.b4);
    return {lhs, rhs};
}

inline real evi_residual(const real_function &h, const b_vector &b, real t, bool bracket_squared, real step = 0, real offset = 0)
{
    return evi_sides(h, b, t, bracket_squared, step, offset).absolute();
}

// e2(b1, b3, b4) - e2(b1, b2, b3, b4)/2
inline real e2_offset(const b_vector &b)
{
    const real e2_134 = b.b1 * b.b3 + b.b1 * b.b4 + b.b3 * b.b4;
    const real e2_all = b.b1 * b.b2 + b.b1 * b.b3 + b.b1 * b.b4 + b.b2 * b.b3 + b.b2 * b.b4 + b.b3 * b.b4;
    return e2_134 - e2_all / 2;
}

// |q'' - RHS| of the sixth Painleve equation.
inline real pvi_residual(const real_function &q, const pvi_params &p, real t, real step = 0)
{
    if (step == 0) {
        step = default_step(t);
    }
    const auto d = central_derivatives<real>(q, t, step);
    const real y = d.f;
    if (y == 0 || y == 1 || y == t) {
        throw singular_sample("q takes a singular value at t=" + std::to_string(static_cast<double>(t)));
    }
    const real rhs = (1 / y + 1 / (y - 1) + 1 / (y - t)) * d.d1 * d.d1 / 2 - (1 / t + 1 / (t - 1) + 1 / (y - t)) * d.d1 +
                     y * (y - 1) * (y - t) / (t * t * (t - 1) * (t - 1)) *
                         (p.alpha + p.beta * t / (y * y) + p.gamma * (t - 1) / ((y - 1) * (y - 1)) + p.delta * t * (t - 1) / ((y - t) * (y - t)));
    return std::fabs(d.d2 - rhs);
}

// ---------------------------------------------------------------------------
// The q_m closed form and its companion h-function.

class qm_function
{
public:
    qm_function(int m, real b1, real b2, parametrization p = parametrization::half_angle)
        : m_m(m), m_b1(b1), m_b2(b2), m_param(p), m_lower(m == 0 ? mpoly(1) : u_gen(0, m - 1, 0), b1, b2, false),
          m_mid(u_gen(0, m, 0), b1, b2, false), m_upper(u_gen(0, m + 1, 0), b1, b2, false)
    {
        if (m < 0) {
            throw std::invalid_argument("qm_function: m must be nonnegative");
        }
    }

    real operator()(real t) const
    {
        const auto e = make_eval_point(t, m_param);
        const real m = m_m;
        const real lo = m_lower.value(e);
        const real mid = m_mid.value(e);
        const real up = m_upper.value(e);
        const real den = up * lo - (2 * m + 1) * (2 * m + 1) * mid * mid;
        if (den == 0) {
            throw degenerate_denominator("q_m denominator vanishes at t=" + std::to_string(static_cast<double>(t)));
        }
        const real brace = (m + real(0.5L)) * m_upper.t_log_derivative(e) - (m + real(1.5L)) * m_mid.t_log_derivative(e) -
                           m_b1 * m_b2 / 2 + (m_b1 * m_b1 * e.z / e.w + m_b2 * m_b2 * e.w / e.z) / 4;
        return t + 4 * mid * mid * brace / den;
    }

    // t(t-1) d/dt log U_{m+1} - (b1^2 z/w + b2^2 w/z)/4 + (m+1/2) q_m - (m+1/2)/2
    [[nodiscard]] real hbar(real t) const
    {
        const auto e = make_eval_point(t, m_param);
        const real k = m_m + real(0.5L);
        return m_upper.t_log_derivative(e) - (m_b1 * m_b1 * e.z / e.w + m_b2 * m_b2 * e.w / e.z) / 4 + k * (*this)(t) - k / 2;
    }

private:
    int m_m;
    real m_b1, m_b2;
    parametrization m_param;
    log_derivative_source m_lower, m_mid, m_upper;
};

inline real eval_qm(int m, real b1, real b2, real t, parametrization p = parametrization::half_angle) { return qm_function(m, b1, b2, p)(t); }

// ---------------------------------------------------------------------------
// Hamiltonian system and the algebraic seed solution.

template <typename Scalar>
Scalar hamiltonian(const b_vector &b, real t, Scalar q, Scalar p)
{
    const Scalar brace = (b.b1 + b.b2) * (q - real(1)) * (q - t) + (b.b1 - b.b2) * q * (q - t) + (b.b3 + b.b4) * q * (q - real(1));
    return (q * (q - real(1)) * (q - t) * p * p - brace * p + (b.b1 + b.b3) * (b.b1 + b.b4) * (q - t)) / (t * (t - 1));
}

enum class seed_formula {
    unscaled_real,    // ((b1+b2)^2 - (b1^2-b2^2) sqrt(t(t-1))) / ((b1-b2)^2 + 4 b1 b2 t)
    unscaled_complex, // same with i sqrt(t(t-1)) in place of sqrt(t(t-1))
    scaled            // ((b1+b2)^2 t + (b1^2-b2^2) sqrt(t(t-1))) / ((b1-b2)^2 + 4 b1 b2 t)
};

inline std::string to_string(seed_formula f)
{
    switch (f) {
    case seed_formula::unscaled_real:
        return "unscaled-real";
    case seed_formula::unscaled_complex:
        return "unscaled-complex";
    case seed_formula::scaled:
        return "scaled";
    }
    return "?";
}

inline std::pair<complex_real, complex_real> seed_pair(seed_formula f, real b1, real b2, real t)
{
    const real den = (b1 - b2) * (b1 - b2) + 4 * b1 * b2 * t;
    if (den == 0) {
        throw singular_sample("seed denominator vanishes");
    }
    const real r = std::sqrt(t * (t - 1));
    complex_real q;
    switch (f) {
    case seed_formula::unscaled_real:
        q = ((b1 + b2) * (b1 + b2) - (b1 * b1 - b2 * b2) * r) / den;
        break;
    case seed_formula::unscaled_complex:
        q = ((b1 + b2) * (b1 + b2) - (b1 * b1 - b2 * b2) * complex_real(0, r)) / den;
        break;
    case seed_formula::scaled:
        q = ((b1 + b2) * (b1 + b2) * t + (b1 * b1 - b2 * b2) * r) / den;
        break;
    }
    const complex_real qq = q * (q - real(1));
    if (std::abs(qq) < real(1e-12L)) {
        throw singular_sample("seed q0 is 0 or 1");
    }
    return {q, (b1 * q - (b1 + b2) / 2) / qq};
}

struct hamiltonian_residuals {
    real dq = 0; // |dq/dt - dH/dp|
    real dp = 0; // |dp/dt + dH/dq|
};

inline hamiltonian_residuals check_hamiltonian_seed(seed_formula f, real b1, real b2, real t, real step = 0, real p_perturbation = 0)
{
    if (!(t > 1)) {
        throw branch_domain("seed check requires t > 1");
    }
    if (step == 0) {
        step = default_step(t);
    }
    const b_vector b{b1, b2, real(-0.5L), 0};
    auto qf = [&](real s) { return seed_pair(f, b1, b2, s).first; };
    auto pf = [&](real s) { return seed_pair(f, b1, b2, s).second + p_perturbation; };
    const auto dq = central_derivatives<complex_real>(qf, t, step);
    const auto dp = central_derivatives<complex_real>(pf, t, step);
    const complex_real q = dq.f, p = dp.f;
    // partials of H in (q, p) by the same stencil along each coordinate
    const real hq = real(1e-5L) * std::max<real>(1, std::abs(q));
    const real hp = real(1e-5L) * std::max<real>(1, std::abs(p));
    auto along = [&](auto &&g, real h) {
        return (g(-2 * h) - real(8) * g(-h) + real(8) * g(h) - g(2 * h)) / (real(12) * h);
    };
    const complex_real dH_dp = along([&](real s) { return hamiltonian<complex_real>(b, t, q, p + s); }, hp);
    const complex_real dH_dq = along([&](real s) { return hamiltonian<complex_real>(b, t, q + s, p); }, hq);
    return {std::abs(dq.d1 - dH_dp), std::abs(dp.d1 + dH_dq)};
}

// h along the seed solution, h = t(t-1) H + offset(t), for the three offset
// readings: none, the constant e2 combination, and e2(b1,b3,b4) t - e2(b)/2.
enum class seed_offset { none, constant, linear };

inline std::string to_string(seed_offset o)
{
    switch (o) {
    case seed_offset::none:
        return "none";
    case seed_offset::constant:
        return "constant";
    case seed_offset::linear:
        return "linear";
    }
    return "?";
}

inline real seed_h(seed_formula f, seed_offset o, real b1, real b2, real t)
{
    const b_vector b{b1, b2, real(-0.5L), 0};
    const auto [q, p] = seed_pair(f, b1, b2, t);
    const real core = std::real(hamiltonian<complex_real>(b, t, q, p)) * t * (t - 1);
    const real e2_134 = b.b1 * b.b3 + b.b1 * b.b4 + b.b3 * b.b4;
    const real e2_all = b.b1 * b.b2 + b.b1 * b.b3 + b.b1 * b.b4 + b.b2 * b.b3 + b.b2 * b.b4 + b.b3 * b.b4;
    switch (o) {
    case seed_offset::none:
        return core;
    case seed_offset::constant:
        return core + e2_134 - e2_all / 2;
    case seed_offset::linear:
        return core + e2_134 * t - e2_all / 2;
    }
    return core;
}

// ---------------------------------------------------------------------------
// Residual tables.

struct residual_row {
    residual_row() = default;
    residual_row(std::string id, const b_vector &bv, real at) : case_id(std::move(id)), b(bv), t(at) {}

    std::string case_id;
    b_vector b;
    real t = 0;
    std::optional<real> linear_bracket;
    std::optional<real> squared_bracket;
    std::optional<real> squared_relative;
    nlohmann::json extra = nlohmann::json::object();
    std::string error; // set when the sample is singular

    [[nodiscard]] nlohmann::json to_json() const
    {
        auto num = [](const std::optional<real> &v) { return v ? nlohmann::json(static_cast<double>(*v)) : nlohmann::json(nullptr); };
        nlohmann::json j{{"case", case_id},
                         {"b_vector", b.to_json()},
                         {"t", static_cast<double>(t)},
                         {"residual_printed_bracket", num(linear_bracket)},
                         {"residual_squared_bracket", num(squared_bracket)},
                         {"residual_squared_relative", num(squared_relative)}};
        if (!extra.empty()) {
            j["extra"] = extra;
        }
        if (!error.empty()) {
            j["error"] = error;
        }
        return j;
    }
};

struct residual_request {
    int n = 1;
    int m = 0;
    real b1 = real(0.3L);
    real b2 = real(0.2L);
    std::vector<real> ts{real(1.5L), 2, 3};
    parametrization param = parametrization::half_angle;
};

inline const std::vector<std::string> &residual_cases()
{
    static const std::vector<std::string> c{"h-zero-n", "h-one-n", "h-zero-b1", "q-double", "seed"};
    return c;
}

// One row per sample t. Invalid t values throw branch_domain before any work.
inline std::vector<residual_row> residual_table(const std::string &case_id, const residual_request &rq)
{
    for (real t : rq.ts) {
        if (!(t > 1)) {
            throw branch_domain("sample t must exceed 1 (got " + std::to_string(static_cast<double>(t)) + ")");
        }
    }
    std::vector<residual_row> rows;
    // a setup failure (family identically zero, say) marks every row
    auto setup_failed = [&](const b_vector &b, const std::domain_error &e) {
        for (real t : rq.ts) {
            residual_row r(case_id, b, t);
            r.error = e.what();
            rows.push_back(std::move(r));
        }
        return rows;
    };
    auto guarded = [&](residual_row row, const std::function<void(residual_row &)> &fill) {
        try {
            fill(row);
        } catch (const std::domain_error &e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    };
    if (case_id == "h-zero-n") {
        const b_vector b{rq.b1, rq.b2, rq.m + real(0.5L), 0};
        std::optional<hnm_function> hf;
        try {
            hf.emplace(0, rq.m, rq.b1, rq.b2, rq.param);
        } catch (const std::domain_error &e) {
            return setup_failed(b, e);
        }
        const hnm_function &h = *hf;
        for (real t : rq.ts) {
            guarded(residual_row(case_id, b, t), [&](residual_row &r) {
                r.linear_bracket = evi_residual(h, b, t, false);
                const auto sides = evi_sides(h, b, t, true);
                r.squared_bracket = sides.absolute();
                r.squared_relative = sides.relative();
                r.extra = {{"m", rq.m}, {"limit", h.is_limit()}, {"squared_with_e2_offset", static_cast<double>(evi_residual(h, b, t, true, 0, e2_offset(b)))}};
            });
        }
    } else if (case_id == "h-one-n") {
        const real b2 = rq.m + 1;
        const b_vector b{0, b2, real(0.5L), b2};
        const hnm_function h(1, rq.m, 0, b2, rq.param);
        for (real t : rq.ts) {
            guarded(residual_row(case_id, b, t), [&](residual_row &r) {
                r.linear_bracket = evi_residual(h, b, t, false);
                const auto sides = evi_sides(h, b, t, true);
                r.squared_bracket = sides.absolute();
                r.squared_relative = sides.relative();
                const real closed = -(2 * t - 1) * b2 * b2 / 2;
                r.extra = {{"m", rq.m}, {"h", static_cast<double>(h(t))}, {"closed_form", static_cast<double>(closed)}, {"closed_form_error", static_cast<double>(std::fabs(h(t) - closed))}};
            });
        }
    } else if (case_id == "h-zero-b1") {
        const b_vector b{0, rq.b2, rq.n / real(2), (rq.n + 2 * rq.m + 1) / real(2)};
        std::optional<hnm_function> hf;
        try {
            hf.emplace(rq.n, rq.m, 0, rq.b2, rq.param);
        } catch (const std::domain_error &e) {
            return setup_failed(b, e);
        }
        const hnm_function &h = *hf;
        for (real t : rq.ts) {
            guarded(residual_row(case_id, b, t), [&](residual_row &r) {
                r.linear_bracket = evi_residual(h, b, t, false);
                const auto sides = evi_sides(h, b, t, true);
                r.squared_bracket = sides.absolute();
                r.squared_relative = sides.relative();
                r.extra = {{"n", rq.n}, {"m", rq.m}, {"limit", h.is_limit()}, {"squared_with_e2_offset", static_cast<double>(evi_residual(h, b, t, true, 0, e2_offset(b)))}};
            });
        }
    } else if (case_id == "q-double") {
        const real k = rq.m + real(0.5L);
        const b_vector first{rq.b1, rq.b2, k, 0}, second{rq.b1, rq.b2, 0, k}, hbar_b{rq.b1, rq.b2, k, 1};
        std::optional<qm_function> qf;
        try {
            qf.emplace(rq.m, rq.b1, rq.b2, rq.param);
        } catch (const std::domain_error &e) {
            return setup_failed(hbar_b, e);
        }
        const qm_function &q = *qf;
        const real_function hb = [&](real s) { return q.hbar(s); };
        for (real t : rq.ts) {
            guarded(residual_row(case_id, hbar_b, t), [&](residual_row &r) {
                r.linear_bracket = evi_residual(hb, hbar_b, t, false);
                const auto sides = evi_sides(hb, hbar_b, t, true);
                r.squared_bracket = sides.absolute();
                r.squared_relative = sides.relative();
                r.extra = {{"m", rq.m},
                           {"q", static_cast<double>(q(t))},
                           {"pvi_residual_first", static_cast<double>(pvi_residual(q, pvi_params::from(first), t))},
                           {"pvi_residual_second", static_cast<double>(pvi_residual(q, pvi_params::from(second), t))}};
            });
        }
    } else if (case_id == "seed") {
        const b_vector b{rq.b1, rq.b2, real(-0.5L), 0};
        for (real t : rq.ts) {
            guarded(residual_row(case_id, b, t), [&](residual_row &r) {
                const real_function h = [&](real s) { return seed_h(seed_formula::scaled, seed_offset::linear, rq.b1, rq.b2, s); };
                r.linear_bracket = evi_residual(h, b, t, false);
                const auto sides = evi_sides(h, b, t, true);
                r.squared_bracket = sides.absolute();
                r.squared_relative = sides.relative();
                nlohmann::json ham = nlohmann::json::object();
                for (auto f : {seed_formula::unscaled_real, seed_formula::unscaled_complex, seed_formula::scaled}) {
                    try {
                        const auto res = check_hamiltonian_seed(f, rq.b1, rq.b2, t);
                        ham[to_string(f)] = {static_cast<double>(res.dq), static_cast<double>(res.dp)};
                    } catch (const std::domain_error &e) {
                        ham[to_string(f)] = e.what();
                    }
                }
                nlohmann::json offsets = nlohmann::json::object();
                for (auto o : {seed_offset::none, seed_offset::constant, seed_offset::linear}) {
                    const real_function ho = [&](real s) { return seed_h(seed_formula::scaled, o, rq.b1, rq.b2, s); };
                    offsets[to_string(o)] = static_cast<double>(evi_residual(ho, b, t, true));
                }
                r.extra = {{"hamiltonian_residuals", ham}, {"h_offset_squared_residuals", offsets}};
            });
        }
    } else {
        throw std::invalid_argument("unknown residual case '" + case_id + "'");
    }
    return rows;
}

} // namespace umemura

#endif
