#ifndef UMEMURA_FAMILIES_HPP
#define UMEMURA_FAMILIES_HPP

#include <umemura/calculus.hpp>
#include <umemura/combinat.hpp>
#include <umemura/mpoly.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace umemura
{

// Dense univariate integer polynomial, index = degree.
using dense_int_poly = std::vector<big_int>;

inline dense_int_poly dense_mul(const dense_int_poly &p, const dense_int_poly &q)
{
    if (p.empty() || q.empty()) {
        return {};
    }
    dense_int_poly r(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), p[i].get_mpz_t(), q[j].get_mpz_t());
        }
    }
    return r;
}

// Parameter products for one symbol s (a or b):
//   bar(k) = s + (k-1)^2,
//   product(2k) = bar(2) bar(4) ... bar(2k), product(2k+1) = bar(1) bar(3) ... bar(2k+1).
// Each is a polynomial in s with integer coefficients.
class param_products
{
public:
    [[nodiscard]] static dense_int_poly bar(int k) { return {big_int((k - 1) * (k - 1)), big_int(1)}; }

    [[nodiscard]] static dense_int_poly product(int i)
    {
        dense_int_poly r{big_int(1)};
        for (int k = i; k >= 1; k -= 2) {
            r = dense_mul(r, bar(k));
        }
        return r;
    }

    // prod over a set of indices of product(i)
    [[nodiscard]] static dense_int_poly product_over(std::span<const int> indices)
    {
        dense_int_poly r{big_int(1)};
        for (int i : indices) {
            r = dense_mul(r, product(i));
        }
        return r;
    }

    // As an mpoly in variable slot var (a or b).
    [[nodiscard]] static mpoly as_mpoly(const dense_int_poly &p, std::size_t slot)
    {
        mpoly r;
        for (std::size_t d = 0; d < p.size(); ++d) {
            mpoly::exponents e{};
            e[slot] = static_cast<unsigned>(d);
            r += mpoly::monomial(e, rational(p[d]));
        }
        return r;
    }
};

class invalid_k : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Orientation of the prefactor prod_{i in I\[k], j in [k]} in the generalized
// sum: (i+j)/(j-i) or (i+j)/(i-j). They differ by (-1)^{k |I\[k]|}. Only
// j_minus_i satisfies the index-shift ratio identities and the three-term
// recurrence (see README).
enum class prefactor_sign { j_minus_i, i_minus_j };

inline void check_k(int n, int m, int k)
{
    if (n < 0 || m < 0) {
        throw invalid_k("n and m must be nonnegative");
    }
    if (k < 0 || k > n) {
        throw invalid_k("k must satisfy 0 <= k <= n (got k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }
    // [k] is a subset of [n;m] whenever k <= n
}

namespace detail
{

struct subset_term {
    rational coeff;
    std::vector<int> a_indices; // I \ [k]
    std::vector<int> b_indices; // [n;m] \ I
    long z_exp;
    long w_exp;
};

// One entry per subset [k] <= I <= [n;m], ascending by bitmask of I \ [k].
inline std::vector<subset_term> u_gen_terms(int n, int m, int k, prefactor_sign sign)
{
    check_k(n, m, k);
    const ground_set g(n, m);
    const std::uint64_t kmask = (std::uint64_t{1} << k) - 1; // [k] are the first k elements
    const std::uint64_t rest = g.full_mask() & ~kmask;
    std::vector<subset_term> out;
    // enumerate submasks of rest in ascending order
    for (std::uint64_t s = 0;; s = ((s | ~rest) + 1) & rest) {
        const index_subset I(g, s | kmask);
        const index_subset S(g, s);
        const auto smembers = S.members();
        const auto comp = I.complement().members();
        rational c(dcoef(I));
        for (int i : smembers) {
            for (int j = 1; j <= k; ++j) {
                c *= sign == prefactor_sign::j_minus_i ? rational(i + j, j - i) : rational(i + j, i - j);
            }
        }
        if (csign_exponent(I) % 2 != 0) {
            c = -c;
        }
        out.push_back({c, smembers, comp, weight(smembers), weight(comp)});
        if (s == rest) {
            break;
        }
    }
    return out;
}

} // namespace detail

// Generalized Umemura polynomial U_{n,m}^{(k)}(z, w; a, b) by its subset sum.
// For k > n no subset contains [k] (n+1 is never in [n;m]), so the sum is
// empty and the result is 0; negative indices throw.
inline mpoly u_gen(int n, int m, int k, prefactor_sign sign = prefactor_sign::j_minus_i)
{
    if (n >= 0 && m >= 0 && k > n) {
        return {};
    }
    const auto terms = detail::u_gen_terms(n, m, k, sign);
    std::vector<std::pair<mpoly::exponents, rational>> raw;
    for (const auto &t : terms) {
        const auto pa = param_products::product_over(t.a_indices);
        const auto pb = param_products::product_over(t.b_indices);
        for (std::size_t i = 0; i < pa.size(); ++i) {
            if (pa[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < pb.size(); ++j) {
                if (pb[j] == 0) {
                    continue;
                }
                mpoly::exponents e{static_cast<unsigned>(t.z_exp), static_cast<unsigned>(t.w_exp), static_cast<unsigned>(i),
                                   static_cast<unsigned>(j)};
                raw.emplace_back(e, t.coeff * rational(big_int(pa[i] * pb[j])));
            }
        }
    }
    return mpoly::from_terms(std::move(raw));
}

// U_{n,m} := U_{n,m}^{(0)}, extended by U_{n,-1} := U_{n-1,0} (and U_{0,-1} := 1).
// The extension is the only choice of seed for which the three-term
// recurrence holds at m = 0 for every n.
inline mpoly u_nm(int n, int m)
{
    if (m >= 0) {
        return u_gen(n, m, 0);
    }
    if (m == -1) {
        return n == 0 ? mpoly(1) : u_gen(n - 1, 0, 0);
    }
    throw invalid_k("u_nm: m must be at least -1");
}

// X_{n,m} = a_{[n;m]} (z+w)^C(n+m+1,2) (z-w)^C(m+1,2)
inline mpoly x_factored(int n, int m)
{
    const ground_set g(n, m);
    const auto pa = param_products::product_over(g.elements());
    const auto zpw = z_var() + w_var();
    const auto zmw = z_var() - w_var();
    const auto e1 = static_cast<unsigned>(binomial(n + m + 1, 2).get_ui());
    const auto e2 = static_cast<unsigned>(binomial(m + 1, 2).get_ui());
    return param_products::as_mpoly(pa, var::a) * zpw.pow(e1) * zmw.pow(e2);
}

// Substitute b := a.
inline mpoly set_b_equal_a(const mpoly &p) { return p.substitute(var::b, a_var()); }

// Candidate readings of the determinant entry for the determinantal formula.
struct det_variant {
    bool c_as_sign = false;   // (-1)^{c(i)} instead of the factor c(i)
    bool c_zero_low = false;  // c(i) = 0 instead of i for i <= n
    bool swap_ab = false;     // a_i on the rank-one part, b_i on the diagonal
    bool k_parity = false;    // extra (-1)^k on the rank-one part

    [[nodiscard]] std::string name() const
    {
        if (!c_as_sign && !c_zero_low && !swap_ab && !k_parity) {
            return "plain";
        }
        std::string s;
        auto add = [&](const char *x) { s += (s.empty() ? "" : "+") + std::string(x); };
        if (c_as_sign) {
            add("c-as-sign");
        }
        if (c_zero_low) {
            add("c-zero-low");
        }
        if (swap_ab) {
            add("swap-ab");
        }
        if (k_parity) {
            add("k-parity");
        }
        return s;
    }

    friend bool operator==(const det_variant &, const det_variant &) = default;

    // All 16 combinations, the plain reading first.
    static std::vector<det_variant> all()
    {
        std::vector<det_variant> v;
        for (int bits = 0; bits < 16; ++bits) {
            v.push_back({(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0, (bits & 8) != 0});
        }
        return v;
    }
};

// Determinant by fraction-free (Bareiss) elimination; entries are exact polynomials.
inline mpoly bareiss_determinant(std::vector<std::vector<mpoly>> m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return mpoly(1);
    }
    mpoly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) {
                ++r;
            }
            if (r == n) {
                return mpoly();
            }
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
            m[i][k] = mpoly();
        }
        prev = m[k][k];
    }
    auto d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

// Determinantal expression of U_{n,m}^{(k)} under the chosen entry reading.
inline mpoly u_gen_det(int n, int m, int k, const det_variant &variant)
{
    check_k(n, m, k);
    const ground_set g(n, m);
    std::vector<int> idx;
    for (int x : g.elements()) {
        if (x > k) {
            idx.push_back(x);
        }
    }
    const std::size_t size = idx.size();
    const std::size_t diag_slot = variant.swap_ab ? var::b : var::a;
    const std::size_t rank_slot = variant.swap_ab ? var::a : var::b;
    std::vector<std::vector<mpoly>> mat(size, std::vector<mpoly>(size));
    for (std::size_t r = 0; r < size; ++r) {
        const int i = idx[r];
        rational kprod(1);
        for (int s = 1; s <= k; ++s) {
            kprod *= rational(i + s, i - s);
        }
        rational all_prod(1);
        for (int s : g.elements()) {
            if (s != i) {
                all_prod *= rational(std::abs(i + s), std::abs(i - s));
            }
        }
        long ci = i <= n ? (variant.c_zero_low ? 0 : i) : (i - n) / 2;
        rational cfac = variant.c_as_sign ? rational(ci % 2 == 0 ? 1 : -1) : rational(ci);
        if (variant.k_parity && k % 2 != 0) {
            cfac = -cfac;
        }
        mpoly::exponents ew{}, ez{};
        ew[var::w] = static_cast<unsigned>(i);
        ez[var::z] = static_cast<unsigned>(i);
        const auto diag_param = param_products::as_mpoly(param_products::product(i), diag_slot);
        const auto rank_param = param_products::as_mpoly(param_products::product(i), rank_slot);
        const auto diag = diag_param.shift(ew) * kprod;
        const auto rank_part = rank_param.shift(ez) * (cfac * all_prod);
        for (std::size_t c = 0; c < size; ++c) {
            const int j = idx[c];
            mat[r][c] = rank_part * rational(2 * i, i + j);
            if (r == c) {
                mat[r][c] += diag;
            }
        }
    }
    return bareiss_determinant(std::move(mat));
}

class recurrence_division_failed : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// T_0, ..., T_count-1 from the Toda-type recurrence with T_0 = T_1 = 1, in
// variables (v, B1, B2). Every step is an exact division by T_{n-1}.
inline std::vector<toda_poly> t_toda_sequence(int count)
{
    std::vector<toda_poly> t;
    if (count <= 0) {
        return t;
    }
    t.emplace_back(1);
    if (count == 1) {
        return t;
    }
    t.emplace_back(1);
    const auto v = toda_poly::variable(0);
    const auto b1sq = toda_poly::variable(1);
    const auto b2sq = toda_poly::variable(2);
    const auto v2m4 = v * v - toda_poly(4);
    for (int n = 1; n + 1 < count; ++n) {
        const auto &tn = t[static_cast<std::size_t>(n)];
        const auto d1 = tn.derivative(0);
        const auto d2 = d1.derivative(0);
        const rational half_shift = pow(rational(2 * n - 1, 2), 2);
        const auto lead = (b1sq * rational(-2) - b2sq * rational(2) + (b1sq - b2sq) * v) * rational(1, 4) + toda_poly(half_shift);
        const auto rhs = lead * tn * tn + v2m4 * v2m4 * (tn * d2 - d1 * d1) * rational(1, 4) + v2m4 * v * tn * d1 * rational(1, 4);
        auto [q, r] = divide_with_remainder(rhs, t[static_cast<std::size_t>(n - 1)]);
        if (!r.is_zero()) {
            throw recurrence_division_failed("Toda recurrence: T_" + std::to_string(n - 1) + " does not divide the step for T_" +
                                             std::to_string(n + 1) + "; remainder " + r.debug_string());
        }
        t.push_back(std::move(q));
    }
    return t;
}

inline toda_poly t_toda(int n)
{
    if (n < 0) {
        throw std::invalid_argument("t_toda: n must be nonnegative");
    }
    return t_toda_sequence(n + 1).back();
}

// Which group's dimension enters the explicit sum.
enum class dim_convention { gl_n, gl_n_minus_1 };

// Explicit subset sum over I <= [n-1] with GL dimensions of lambda(I):
//   sum dim(lambda(I)) c_I d_{[n-1]\I} z^{|I|} w^{|I^c|},
// c_k = prod_{j<=k} (c + (2j-1)^2); c and d are returned in the a and b slots.
inline mpoly u_dimension_sum(int n, dim_convention conv)
{
    if (n < 1) {
        throw std::invalid_argument("u_dimension_sum: n must be at least 1");
    }
    const int group = conv == dim_convention::gl_n ? n : n - 1;
    auto ck = [](int k) {
        dense_int_poly r{big_int(1)};
        for (int j = 1; j <= k; ++j) {
            r = dense_mul(r, dense_int_poly{big_int((2 * j - 1) * (2 * j - 1)), big_int(1)});
        }
        return r;
    };
    const int size = n - 1;
    std::vector<std::pair<mpoly::exponents, rational>> raw;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
        std::vector<int> in, out;
        for (int i = 1; i <= size; ++i) {
            ((mask >> (i - 1)) & 1u ? in : out).push_back(i);
        }
        const auto lam = lambda_of_subset(in, n);
        if (static_cast<int>(lam.length()) > group) {
            continue; // the representation does not exist for this group
        }
        const big_int dim = gl_dim(group, lam);
        dense_int_poly pc{big_int(1)}, pd{big_int(1)};
        for (int i : in) {
            pc = dense_mul(pc, ck(i));
        }
        for (int i : out) {
            pd = dense_mul(pd, ck(i));
        }
        const auto wz = static_cast<unsigned>(weight(in));
        const auto ww = static_cast<unsigned>(weight(out));
        for (std::size_t i = 0; i < pc.size(); ++i) {
            for (std::size_t j = 0; j < pd.size(); ++j) {
                raw.emplace_back(mpoly::exponents{wz, ww, static_cast<unsigned>(i), static_cast<unsigned>(j)}, rational(big_int(dim * pc[i] * pd[j])));
            }
        }
    }
    return mpoly::from_terms(std::move(raw));
}

} // namespace umemura

#endif
