#ifndef UMEMURA_IDENTITIES_HPP
#define UMEMURA_IDENTITIES_HPP

#include <umemura/calculus.hpp>
#include <umemura/combinat.hpp>
#include <umemura/families.hpp>
#include <umemura/serialize.hpp>
#include <umemura/urat.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace umemura
{

enum class check_status { pass, fail, conditional_pass };

inline std::string to_string(check_status s)
{
    switch (s) {
    case check_status::pass:
        return "pass";
    case check_status::fail:
        return "fail";
    case check_status::conditional_pass:
        return "conditional-pass";
    }
    return "?";
}

struct identity_report {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    check_status status = check_status::fail;
    std::string convention;
    std::string witness_text; // empty on pass
    std::string anchor;       // one-line statement of what was checked
    double wall_time_ms = 0;
    std::vector<std::string> tags; // failure classes, matched against known discrepancies
    nlohmann::json details = nlohmann::json::object();

    [[nodiscard]] bool ok() const { return status != check_status::fail; }

    [[nodiscard]] nlohmann::json to_json(bool timing = true) const
    {
        nlohmann::json j{{"id", id},
                         {"params", params},
                         {"status", to_string(status)},
                         {"convention", convention},
                         {"witness_text", witness_text},
                         {"anchor", anchor},
                         {"wall_time_ms", timing ? wall_time_ms : 0.0}};
        if (!tags.empty()) {
            j["tags"] = tags;
        }
        if (!details.empty()) {
            j["details"] = details;
        }
        return j;
    }
};

namespace detail
{

class stopwatch
{
public:
    [[nodiscard]] double ms() const { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - m_start).count(); }

private:
    std::chrono::steady_clock::time_point m_start = std::chrono::steady_clock::now();
};

inline std::string set_text(const std::vector<int> &s)
{
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        r += (i ? "," : "") + std::to_string(s[i]);
    }
    return r + "}";
}

inline mpoly abar(int k) { return a_var() + mpoly(rational((k - 1) * (k - 1))); }
inline mpoly bbar(int k) { return b_var() + mpoly(rational((k - 1) * (k - 1))); }

} // namespace detail

// ---------------------------------------------------------------------------
// Three-term recurrence in m: a Hirota term plus a first-order correction.

enum class seed_convention {
    previous_row, // U_{n,-1} = U_{n-1,0}, U_{0,-1} = 1
    one           // U_{n,-1} = 1
};

inline std::string to_string(seed_convention s) { return s == seed_convention::previous_row ? "seed U(n,-1)=U(n-1,0)" : "seed U(n,-1)=1"; }

struct recurrence_options {
    seed_convention seed = seed_convention::previous_row;
    prefactor_sign sign = prefactor_sign::j_minus_i;
};

inline mpoly hirota_recurrence_difference(int n, int m, const recurrence_options &opt = {})
{
    const mpoly lower = m == 0 && opt.seed == seed_convention::one ? mpoly(1) : u_nm(n, m - 1);
    const mpoly u = u_gen(n, m, 0, opt.sign);
    const mpoly upper = u_gen(n, m + 1, 0, opt.sign);
    const mpoly u1 = u_gen(n, m, 1, opt.sign);
    const int N = n + 2 * m + 2;
    const auto z2 = z_var() * z_var();
    const auto w2 = w_var() * w_var();
    const auto rhs = (-(detail::abar(N) * z2) + detail::bbar(N) * w2) * u * u + z2 * w2 * hirota2(u, u) * rational(8) -
                     a_var() * b_var() * (a_var() - b_var()) * z2 * w2 * u1 * u1 * rational(4, (N - 1) * (N - 1));
    return lower * upper - rhs;
}

inline identity_report check_hirota_recurrence(int n, int m, const recurrence_options &opt = {})
{
    detail::stopwatch sw;
    identity_report r;
    r.id = "hirota-recurrence";
    r.params = {{"n", n}, {"m", m}};
    r.anchor = "U(n,m-1) U(n,m+1) = (-abar z^2 + bbar w^2) U^2 + 8 z^2 w^2 D^2 U.U - 4 ab(a-b) z^2 w^2 (U^(1))^2/(n+2m+1)^2";
    r.convention = to_string(opt.seed) + (opt.sign == prefactor_sign::j_minus_i ? "; prefactor (i+j)/(j-i)" : "; prefactor (i+j)/(i-j)");
    const auto diff = hirota_recurrence_difference(n, m, opt);
    const auto reduced = reduce_mod_relation(diff);
    r.details = {{"raw_zero", diff.is_zero()}, {"reduced_zero", reduced.is_zero()}};
    r.status = reduced.is_zero() ? check_status::pass : check_status::fail;
    if (!reduced.is_zero()) {
        r.witness_text = to_canonical_text(reduced);
    }
    r.wall_time_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------------------
// Recurrence in the first parameter b1 for the zero-n family.

// u_gen(0, index, 0) at a = -4 (b1 + shift)^2, b = -4 b2^2 in (z, w, b1, b2).
inline b1b2_poly umemura_b1b2(int index, int b1_shift = 0)
{
    const mpoly u = index == -1 ? mpoly(1) : u_gen(0, index, 0);
    const auto z = b1b2_poly::variable(0);
    const auto w = b1b2_poly::variable(1);
    const auto b1 = b1b2_poly::variable(2) + b1b2_poly(b1_shift);
    const auto b2 = b1b2_poly::variable(3);
    const std::array<b1b2_poly, 4> images{z, w, b1 * b1 * rational(-4), b2 * b2 * rational(-4)};
    return compose<zwb1b2_vars>(u, images);
}

inline identity_report check_b1_shift_recurrence(int m, int index_shift = 0)
{
    detail::stopwatch sw;
    identity_report r;
    r.id = "b1-shift-recurrence";
    r.params = {{"m", m}, {"shift", index_shift}};
    r.anchor = "(b1^2-b2^2) U(b1-1) U(b1+1) = (b1^2-b2^2) U^2 + 2 z^2 D^2 U.U";
    r.convention = "U_m = U(0, m+shift) at a=-4 b1^2, b=-4 b2^2";
    const int idx = m + index_shift;
    if (idx < -1) {
        r.status = check_status::fail;
        r.witness_text = "index out of range";
        return r;
    }
    const auto u = umemura_b1b2(idx);
    const auto lo = umemura_b1b2(idx, -1);
    const auto hi = umemura_b1b2(idx, 1);
    const auto b1 = b1b2_poly::variable(2);
    const auto b2 = b1b2_poly::variable(3);
    const auto z = b1b2_poly::variable(0);
    const auto gap = b1 * b1 - b2 * b2;
    const auto diff = gap * lo * hi - (gap * u * u + z * z * hirota2(u, u) * rational(2));
    const auto reduced = reduce_mod_relation(diff);
    r.details = {{"raw_zero", diff.is_zero()}, {"reduced_zero", reduced.is_zero()}};
    r.status = reduced.is_zero() ? check_status::pass : check_status::fail;
    if (!reduced.is_zero()) {
        r.witness_text = to_canonical_text(reduced);
    }
    r.wall_time_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------------------
// Partial fractions of the twin product sum and the facts about its residues.

struct residue_checks {
    identity_report decomposition;
    identity_report residue_sum;
    identity_report vanishing;
};

namespace detail
{

inline nlohmann::json pair_params(const std::vector<int> &I, const std::vector<int> &J) { return {{"I", I}, {"J", J}}; }

inline std::string coeff_text(const std::map<int, rational> &c)
{
    std::string s;
    for (const auto &[l, b] : c) {
        s += (s.empty() ? "" : ", ") + ("b" + std::to_string(l) + "=" + b.to_string());
    }
    return s;
}

} // namespace detail

inline residue_checks check_residues(const std::vector<int> &I, const std::vector<int> &J)
{
    detail::stopwatch sw;
    residue_checks out;
    auto &d = out.decomposition;
    auto &s = out.residue_sum;
    auto &v = out.vanishing;
    d.id = "partial-fractions";
    s.id = "residue-sum";
    v.id = "vanishing-residues";
    d.anchor = "twin product sum = 2 + sum_l b_l/((x+2-l)(x+l)) over l in I u J";
    s.anchor = "sum_l b_l = 4(|I|-|J|)^2 - 4(|I|+|J|)";
    v.anchor = "for l in I^J: b_l = 0 iff l-2 in I^J; for l in I\\J: b_l = 0 iff l-2 in J";
    d.params = s.params = v.params = detail::pair_params(I, J);

    partial_fraction_result pf;
    try {
        pf = partial_fractions(I, J);
    } catch (const ansatz_inconsistent &e) {
        d.status = s.status = v.status = check_status::fail;
        d.witness_text = s.witness_text = v.witness_text = e.what();
        d.wall_time_ms = sw.ms();
        return out;
    }
    // x -> infinity limit is 2: deg(numerator of the excess) < deg(denominator)
    const bool tends_to_two = pf.numerator.degree() < pf.denominator.degree();
    d.status = tends_to_two ? check_status::pass : check_status::fail;
    d.details = {{"coefficients", detail::coeff_text(pf.coefficients)}, {"unique", pf.unique}, {"tends_to_two", tends_to_two}};
    if (!tends_to_two) {
        d.witness_text = "excess numerator degree " + std::to_string(pf.numerator.degree()) + " >= denominator degree";
    }

    rational total;
    for (const auto &[l, b] : pf.coefficients) {
        total += b;
    }
    auto predicted = [](long i, long j) { return rational(4 * (i - j) * (i - j) - 4 * (i + j)); };
    const rational by_sum = predicted(weight(I), weight(J));
    const rational by_card = predicted(static_cast<long>(I.size()), static_cast<long>(J.size()));
    s.convention = "|S| = sum of elements";
    s.details = {{"sum", total.to_string()},
                 {"element_sum_prediction", by_sum.to_string()},
                 {"cardinality_prediction", by_card.to_string()},
                 {"element_sum_holds", total == by_sum},
                 {"cardinality_holds", total == by_card}};
    s.status = total == by_sum ? check_status::pass : check_status::fail;
    if (total != by_sum) {
        s.witness_text = "sum " + total.to_string() + " != " + by_sum.to_string();
    }

    const std::set<int> Is(I.begin(), I.end()), Js(J.begin(), J.end());
    std::vector<std::string> violations;
    std::set<std::string> tags;
    auto record = [&](int l, bool zero) {
        violations.push_back("l=" + std::to_string(l) + (zero ? ": b=0 but predicted nonzero" : ": b=" + pf.coefficients.at(l).to_string() + " but predicted 0"));
        if (l == 1) {
            tags.insert("lambda-one");
        } else if (zero && (Is.contains(1) != Js.contains(1))) {
            tags.insert("cancellation-with-one");
        } else {
            tags.insert("other");
        }
    };
    for (int l : I) {
        const bool zero = pf.coefficients.at(l).is_zero();
        const bool pred = Js.contains(l) ? (Is.contains(l - 2) && Js.contains(l - 2)) : Js.contains(l - 2);
        if (zero != pred) {
            record(l, zero);
        }
    }
    v.status = violations.empty() ? check_status::pass : check_status::fail;
    v.tags.assign(tags.begin(), tags.end());
    for (const auto &x : violations) {
        v.witness_text += (v.witness_text.empty() ? "" : "; ") + x;
    }
    const double t = sw.ms();
    d.wall_time_ms = s.wall_time_ms = v.wall_time_ms = t;
    return out;
}

inline identity_report check_partial_fractions(const std::vector<int> &I, const std::vector<int> &J) { return check_residues(I, J).decomposition; }
inline identity_report check_residue_sum(const std::vector<int> &I, const std::vector<int> &J) { return check_residues(I, J).residue_sum; }
inline identity_report check_vanishing_residues(const std::vector<int> &I, const std::vector<int> &J) { return check_residues(I, J).vanishing; }

// All pairs of subsets of [n;m], one aggregated report per identity.
inline std::vector<identity_report> scan_residues(int n, int m)
{
    detail::stopwatch sw;
    const ground_set g(n, m);
    std::array<identity_report, 3> agg;
    const char *ids[3] = {"partial-fractions", "residue-sum", "vanishing-residues"};
    std::array<long, 3> failures{};
    std::array<std::set<std::string>, 3> tags;
    long pairs = 0;
    for (std::uint64_t a = 0; a <= g.full_mask(); ++a) {
        for (std::uint64_t b = 0; b <= g.full_mask(); ++b) {
            const auto I = index_subset(g, a).members();
            const auto J = index_subset(g, b).members();
            auto rc = check_residues(I, J);
            ++pairs;
            identity_report *each[3] = {&rc.decomposition, &rc.residue_sum, &rc.vanishing};
            for (int i = 0; i < 3; ++i) {
                if (!each[i]->ok()) {
                    if (failures[static_cast<std::size_t>(i)]++ == 0) {
                        agg[static_cast<std::size_t>(i)].witness_text = "I=" + detail::set_text(I) + " J=" + detail::set_text(J) + ": " + each[i]->witness_text;
                    }
                    tags[static_cast<std::size_t>(i)].insert(each[i]->tags.begin(), each[i]->tags.end());
                }
                if (agg[static_cast<std::size_t>(i)].anchor.empty()) {
                    agg[static_cast<std::size_t>(i)].anchor = each[i]->anchor;
                    agg[static_cast<std::size_t>(i)].convention = each[i]->convention;
                }
            }
        }
    }
    std::vector<identity_report> out;
    for (int i = 0; i < 3; ++i) {
        auto &r = agg[static_cast<std::size_t>(i)];
        r.id = ids[i];
        r.params = {{"n", n}, {"m", m}};
        r.status = failures[static_cast<std::size_t>(i)] == 0 ? check_status::pass : check_status::fail;
        r.tags.assign(tags[static_cast<std::size_t>(i)].begin(), tags[static_cast<std::size_t>(i)].end());
        r.details = {{"pairs", pairs}, {"failing_pairs", failures[static_cast<std::size_t>(i)]}};
        r.wall_time_ms = sw.ms();
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Equal-parameter factorization.

inline identity_report check_equal_parameter_factorization(int n, int m)
{
    detail::stopwatch sw;
    identity_report r;
    r.id = "equal-parameter-factorization";
    r.params = {{"n", n}, {"m", m}};
    r.anchor = "U(n,m)|_{b=a} = a_[n;m] (z+w)^C(n+m+1,2) (z-w)^C(m+1,2)";
    r.convention = "overall sign (-1)^C(m+1,2)";
    const auto u = set_b_equal_a(u_gen(n, m, 0));
    const auto x = x_factored(n, m);
    const bool neg = (m * (m + 1) / 2) % 2 != 0;
    const auto diff = u - (neg ? -x : x);
    const long deg_identity = binomial(n + m + 1, 2).get_si() + binomial(m + 1, 2).get_si();
    const long ground_weight = weight(ground_set(n, m).elements());
    r.details = {{"matches_plus", u == x}, {"matches_minus", u == -x}, {"degree_identity", deg_identity == ground_weight}};
    r.status = diff.is_zero() && deg_identity == ground_weight ? check_status::pass : check_status::fail;
    if (!diff.is_zero()) {
        r.witness_text = to_canonical_text(diff);
    } else if (deg_identity != ground_weight) {
        r.witness_text = "degree " + std::to_string(deg_identity) + " != weight " + std::to_string(ground_weight);
    }
    r.wall_time_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------------------
// Reduction at a = 0 to the zero-n family.

// b_{[n;m]_odd}: product of the b parameter products over odd ground elements.
inline mpoly odd_b_products(int n, int m)
{
    const ground_set g(n, m);
    std::vector<int> odd;
    for (int x : g.elements()) {
        if (x % 2 != 0) {
            odd.push_back(x);
        }
    }
    return param_products::as_mpoly(param_products::product_over(odd), var::b);
}

inline mpoly zero_a_reduction_rhs(int n, int m)
{
    const mpoly bodd = odd_b_products(n, m);
    if (n % 2 == 0) {
        const int h = n / 2;
        return bodd * w_var().pow(static_cast<unsigned>(h * h)) * u_gen(0, m + h, 0).evaluate_at(var::a, rational(-n * n));
    }
    const int e = (n + 2 * m + 1) / 2;
    return bodd * w_var().pow(static_cast<unsigned>(e * e)) * u_gen(0, (n - 1) / 2, 0).evaluate_at(var::a, rational(-(2 * m + n + 1) * (2 * m + n + 1)));
}

inline identity_report check_zero_a_reduction(int n, int m)
{
    detail::stopwatch sw;
    identity_report r;
    r.id = "zero-a-reduction";
    r.params = {{"n", n}, {"m", m}};
    r.anchor = n % 2 == 0 ? "U(n,m)|_{a=0} = b_odd w^((n/2)^2) U(0,m+n/2)|_{a=-n^2}"
                          : "U(n,m)|_{a=0} = b_odd w^(((n+2m+1)/2)^2) U(0,(n-1)/2)|_{a=-(n+2m+1)^2}";
    r.convention = "exact, no reduction";
    const auto lhs = u_gen(n, m, 0).evaluate_at(var::a, rational(0));
    const auto rhs = zero_a_reduction_rhs(n, m);
    const auto diff = lhs - rhs;
    r.details = {{"lhs_w_degree", lhs.degree(var::w)}, {"rhs_w_degree", rhs.degree(var::w)}};
    r.status = diff.is_zero() ? check_status::pass : check_status::fail;
    if (!diff.is_zero()) {
        r.witness_text = to_canonical_text(diff);
    }
    r.wall_time_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------------------
// Bilinear conjecture at b1 = 0.

enum class conjecture_form {
    negative_b, // -b (U_{m+1} U_{m-1} - (2m+1)^2 U_m^2) = U(2,m-1)^2
    positive_b  // +b (U_{m+1} U_{m-1} - (2m+1)^2 U_m^2) = U(2,m-1)^2
};

inline std::string to_string(conjecture_form f) { return f == conjecture_form::negative_b ? "negative-b" : "positive-b"; }

inline mpoly conjecture_difference(int m, conjecture_form form, int index_shift = 0)
{
    auto U = [&](int j) {
        const int idx = j + index_shift;
        return (idx == -1 ? mpoly(1) : u_gen(0, idx, 0)).evaluate_at(var::a, rational(0));
    };
    const auto bracket = U(m + 1) * U(m - 1) - U(m) * U(m) * rational((2 * m + 1) * (2 * m + 1));
    const auto u2 = u_gen(2, m - 1, 0).evaluate_at(var::a, rational(0));
    const auto lhs = form == conjecture_form::negative_b ? -(b_var() * bracket) : b_var() * bracket;
    return lhs - u2 * u2;
}

inline identity_report check_conjecture(int m, conjecture_form form = conjecture_form::negative_b, int index_shift = 0)
{
    detail::stopwatch sw;
    identity_report r;
    r.id = "bilinear-conjecture";
    r.params = {{"m", m}, {"form", to_string(form)}, {"shift", index_shift}};
    r.anchor = form == conjecture_form::negative_b ? "-b (U_{m+1} U_{m-1} - (2m+1)^2 U_m^2) = U(2,m-1)^2 at a=0"
                                                : "b (U_{m+1} U_{m-1} - (2m+1)^2 U_m^2) = U(2,m-1)^2 at a=0";
    r.convention = "U_j = U(0, j+" + std::to_string(index_shift) + ") at a=0; modulo w^2-z^2-1";
    if (m < 1 || m - 1 + index_shift < -1) {
        r.status = check_status::fail;
        r.witness_text = "index out of range";
        return r;
    }
    const auto diff = conjecture_difference(m, form, index_shift);
    const auto reduced = reduce_mod_relation(diff);
    r.details = {{"raw_zero", diff.is_zero()}, {"reduced_zero", reduced.is_zero()}};
    if (reduced.is_zero()) {
        r.status = check_status::conditional_pass;
    } else {
        r.status = check_status::fail;
        r.witness_text = to_canonical_text(reduced);
        r.tags.push_back(to_string(form) + "-form");
    }
    r.wall_time_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------------------
// Index-shift ratios and the empty first-order family.

inline identity_report check_index_shift_ratio(int k, int m, prefactor_sign sign = prefactor_sign::j_minus_i)
{
    detail::stopwatch sw;
    identity_report r;
    r.id = "index-shift-ratio";
    r.params = {{"k", k}, {"m", m}};
    r.anchor = "U(k,m)^(k) (2k+2m+1)!! = U(k+2,m-1)^(k+1) (2k+1)!! (2m-1)!!";
    r.convention = sign == prefactor_sign::j_minus_i ? "prefactor (i+j)/(j-i)" : "prefactor (i+j)/(i-j)";
    const auto lhs = u_gen(k, m, k, sign) * rational(factorial_odd(k + m));
    const auto rhs = u_gen(k + 2, m - 1, k + 1, sign) * rational(big_int(factorial_odd(k) * factorial_odd(m - 1)));
    const auto diff = lhs - rhs;
    r.status = diff.is_zero() ? check_status::pass : check_status::fail;
    if (!diff.is_zero()) {
        r.witness_text = to_canonical_text(diff);
    }
    r.wall_time_ms = sw.ms();
    return r;
}

inline identity_report check_first_order_vanishing(int m)
{
    detail::stopwatch sw;
    identity_report r;
    r.id = "first-order-vanishing";
    r.params = {{"m", m}};
    r.anchor = "U(0,m)^(1) = 0";
    const auto u = u_gen(0, m, 1);
    r.status = u.is_zero() ? check_status::pass : check_status::fail;
    if (!u.is_zero()) {
        r.witness_text = to_canonical_text(u);
    }
    r.wall_time_ms = sw.ms();
    return r;
}

inline identity_report check_integrality(int n, int m)
{
    detail::stopwatch sw;
    identity_report r;
    r.id = "integrality";
    r.params = {{"n", n}, {"m", m}};
    r.anchor = "d(I) is a positive integer for every I in [n;m]";
    const ground_set g(n, m);
    long count = 0;
    for (std::uint64_t s = 0; s <= g.full_mask(); ++s) {
        try {
            (void)dcoef(index_subset(g, s));
            ++count;
        } catch (const non_integer_coefficient &e) {
            r.status = check_status::fail;
            r.witness_text = e.what();
            r.wall_time_ms = sw.ms();
            return r;
        }
    }
    r.details = {{"subsets", count}};
    r.status = check_status::pass;
    r.wall_time_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------------------
// Suite.

struct suite_bounds {
    int recurrence_max_n = 4, recurrence_max_m = 3;
    int b1_shift_max_m = 3;
    int residue_max_weight = 6; // ground sets with n + 2m <= this
    int factorization_max = 8;  // n + m <= this
    int reduction_max_n = 6, reduction_max_m = 3;
    int conjecture_max_m = 6;
    int ratio_max_k = 3, ratio_max_m = 4;
    int vanishing_max_m = 8;
    int integrality_max_weight = 12;

    static suite_bounds empty()
    {
        return {-1, -1, -1, -1, -1, 0, -1, 0, -1, 0, -1, -1};
    }
};

struct known_discrepancy {
    std::string id;
    std::string tag; // empty: any failure of this id
};

// Failures expected under the default bounds.
inline std::vector<known_discrepancy> default_known_discrepancies()
{
    return {{"vanishing-residues", "lambda-one"}, {"vanishing-residues", "cancellation-with-one"}, {"bilinear-conjecture", "negative-b-form"}};
}

inline nlohmann::json known_discrepancies_to_json(const std::vector<known_discrepancy> &k)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &d : k) {
        arr.push_back({{"id", d.id}, {"tag", d.tag}});
    }
    return {{"schema", 1}, {"known", arr}};
}

inline std::vector<known_discrepancy> known_discrepancies_from_json(const nlohmann::json &j)
{
    if (!j.is_object() || !j.contains("known") || !j["known"].is_array()) {
        throw parse_error("known discrepancies: expected {\"known\": [...]}");
    }
    std::vector<known_discrepancy> out;
    for (const auto &e : j["known"]) {
        if (!e.is_object() || !e.contains("id") || !e["id"].is_string()) {
            throw parse_error("known discrepancies: each entry needs a string \"id\"");
        }
        out.push_back({e["id"].get<std::string>(), e.value("tag", std::string())});
    }
    return out;
}

// A report is unexpected when it failed and no combination of known entries
// covers every one of its failure classes.
inline bool is_known(const identity_report &r, const std::vector<known_discrepancy> &known)
{
    if (r.ok()) {
        return true;
    }
    for (const auto &k : known) {
        if (k.id == r.id && k.tag.empty()) {
            return true;
        }
    }
    if (r.tags.empty()) {
        return false;
    }
    return std::all_of(r.tags.begin(), r.tags.end(), [&](const std::string &t) {
        return std::any_of(known.begin(), known.end(), [&](const known_discrepancy &k) { return k.id == r.id && k.tag == t; });
    });
}

inline const std::vector<std::string> &suite_ids()
{
    static const std::vector<std::string> ids{"integrality",
                                              "equal-parameter-factorization",
                                              "index-shift-ratio",
                                              "first-order-vanishing",
                                              "partial-fractions",
                                              "residue-sum",
                                              "vanishing-residues",
                                              "hirota-recurrence",
                                              "zero-a-reduction",
                                              "b1-shift-recurrence",
                                              "bilinear-conjecture"};
    return ids;
}

// Runs the selected checkers (all when `only` is empty) in a fixed order.
inline std::vector<identity_report> run_suite(const suite_bounds &b, const std::vector<std::string> &only = {})
{
    auto wanted = [&](const std::string &id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
    std::vector<identity_report> out;
    if (wanted("integrality")) {
        for (int n = 0; n <= b.integrality_max_weight; ++n) {
            for (int m = 0; n + 2 * m <= b.integrality_max_weight; ++m) {
                out.push_back(check_integrality(n, m));
            }
        }
    }
    if (wanted("equal-parameter-factorization")) {
        for (int n = 0; n <= b.factorization_max; ++n) {
            for (int m = 0; n + m <= b.factorization_max; ++m) {
                out.push_back(check_equal_parameter_factorization(n, m));
            }
        }
    }
    if (wanted("index-shift-ratio")) {
        for (int k = 0; k <= b.ratio_max_k; ++k) {
            for (int m = 1; m <= b.ratio_max_m; ++m) {
                out.push_back(check_index_shift_ratio(k, m));
            }
        }
    }
    if (wanted("first-order-vanishing")) {
        for (int m = 0; m <= b.vanishing_max_m; ++m) {
            out.push_back(check_first_order_vanishing(m));
        }
    }
    const bool any_residue = wanted("partial-fractions") || wanted("residue-sum") || wanted("vanishing-residues");
    if (any_residue) {
        for (int n = 0; n <= b.residue_max_weight; ++n) {
            for (int m = 0; n + 2 * m <= b.residue_max_weight; ++m) {
                for (auto &r : scan_residues(n, m)) {
                    if (wanted(r.id)) {
                        out.push_back(std::move(r));
                    }
                }
            }
        }
    }
    if (wanted("hirota-recurrence")) {
        for (int n = 0; n <= b.recurrence_max_n; ++n) {
            for (int m = 0; m <= b.recurrence_max_m; ++m) {
                out.push_back(check_hirota_recurrence(n, m));
            }
        }
    }
    if (wanted("zero-a-reduction")) {
        for (int n = 1; n <= b.reduction_max_n; ++n) {
            for (int m = 0; m <= b.reduction_max_m; ++m) {
                out.push_back(check_zero_a_reduction(n, m));
            }
        }
    }
    if (wanted("b1-shift-recurrence")) {
        for (int m = 0; m <= b.b1_shift_max_m; ++m) {
            out.push_back(check_b1_shift_recurrence(m));
        }
    }
    if (wanted("bilinear-conjecture")) {
        for (int m = 1; m <= b.conjecture_max_m; ++m) {
            out.push_back(check_conjecture(m, conjecture_form::negative_b));
            out.push_back(check_conjecture(m, conjecture_form::positive_b));
        }
    }
    return out;
}

struct suite_summary {
    long passed = 0;
    long failed_known = 0;
    long failed_unexpected = 0;
};

inline suite_summary summarize(const std::vector<identity_report> &reports, const std::vector<known_discrepancy> &known)
{
    suite_summary s;
    for (const auto &r : reports) {
        if (r.ok()) {
            ++s.passed;
        } else if (is_known(r, known)) {
            ++s.failed_known;
        } else {
            ++s.failed_unexpected;
        }
    }
    return s;
}

inline nlohmann::json suite_to_json(const std::vector<identity_report> &reports, const std::vector<known_discrepancy> &known, bool timing = true)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : reports) {
        auto j = r.to_json(timing);
        j["known_discrepancy"] = !r.ok() && is_known(r, known);
        arr.push_back(std::move(j));
    }
    const auto s = summarize(reports, known);
    return {{"schema", 1},
            {"reports", arr},
            {"summary", {{"total", reports.size()}, {"passed", s.passed}, {"failed_known", s.failed_known}, {"failed_unexpected", s.failed_unexpected}}}};
}

} // namespace umemura

#endif
