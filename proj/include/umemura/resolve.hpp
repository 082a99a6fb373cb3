#ifndef UMEMURA_RESOLVE_HPP
#define UMEMURA_RESOLVE_HPP

#include <umemura/families.hpp>
#include <umemura/serialize.hpp>

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace umemura
{

// How (z^2, w^2) of the subset-sum family, and (z, w) of the explicit GL sum,
// are identified with the Toda variable v.
enum class variable_map {
    affine,           // ((2-v)/4, (2+v)/4)
    quadratic,        // ((v^2-4)/4, v^2/4)
    affine_negated,   // ((v-2)/4, (v+2)/4); only in the extended search
    quadratic_negated // ((4-v^2)/4, v^2/4); only in the extended search
};

inline std::string to_string(variable_map m)
{
    switch (m) {
    case variable_map::affine:
        return "affine";
    case variable_map::quadratic:
        return "quadratic";
    case variable_map::affine_negated:
        return "affine-negated";
    case variable_map::quadratic_negated:
        return "quadratic-negated";
    }
    return "?";
}

inline std::string to_string(dim_convention d) { return d == dim_convention::gl_n ? "GL(n)" : "GL(n-1)"; }

inline std::pair<toda_poly, toda_poly> variable_map_images(variable_map m)
{
    const auto v = toda_poly::variable(0);
    switch (m) {
    case variable_map::affine:
        return {(toda_poly(2) - v) * rational(1, 4), (toda_poly(2) + v) * rational(1, 4)};
    case variable_map::quadratic:
        return {(v * v - toda_poly(4)) * rational(1, 4), v * v * rational(1, 4)};
    case variable_map::affine_negated:
        return {(v - toda_poly(2)) * rational(1, 4), (toda_poly(2) + v) * rational(1, 4)};
    case variable_map::quadratic_negated:
        return {(toda_poly(4) - v * v) * rational(1, 4), v * v * rational(1, 4)};
    }
    return {};
}

// z^(2i) w^(2j) -> z^i w^j; throws if an odd power of z or w occurs.
inline mpoly halve_zw(const mpoly &p)
{
    std::vector<std::pair<mpoly::exponents, rational>> out;
    for (const auto &t : p.terms()) {
        auto e = mpoly::unpack(t.key);
        if (e[var::z] % 2 != 0 || e[var::w] % 2 != 0) {
            throw std::domain_error("halve_zw: odd power of z or w");
        }
        e[var::z] /= 2;
        e[var::w] /= 2;
        out.emplace_back(e, t.coeff);
    }
    return mpoly::from_terms(std::move(out));
}

// Polynomial in (z, w, a, b) -> (v, B1, B2) with (z, w) sent through the map
// and a = -4 B1, b = -4 B2.
inline toda_poly to_toda_ring(const mpoly &p, variable_map m)
{
    const auto [zi, wi] = variable_map_images(m);
    const std::array<toda_poly, 4> images{zi, wi, toda_poly::variable(1) * rational(-4), toda_poly::variable(2) * rational(-4)};
    return compose<toda_vars>(p, images);
}

struct convention_candidate {
    int index_shift = 0;  // U_n <-> u_gen(0, n + s, 0)
    int alpha = 0;        // Toda scale 2^(alpha n(n-1) + beta n)
    int beta = 0;
    variable_map subset_sum_map = variable_map::affine;
    variable_map explicit_map = variable_map::affine;
    dim_convention dim = dim_convention::gl_n;

    [[nodiscard]] nlohmann::json to_json() const
    {
        return {{"index_shift", index_shift},
                {"alpha", alpha},
                {"beta", beta},
                {"subset_sum_variable_map", to_string(subset_sum_map)},
                {"explicit_variable_map", to_string(explicit_map)},
                {"dimension_convention", to_string(dim)}};
    }
};

struct resolve_bounds {
    int max_index = 5;       // families compared for 1 <= n <= max_index
    int det_bound = 4;       // determinant variants checked for n + 2m <= det_bound
    int factor_bound = 6;    // equal-parameter sign law checked for n + m <= factor_bound
    int integrality_bound = 6;
};

struct t2_reading {
    std::string name;
    std::string formula;
    toda_poly value;
    std::optional<rational> ratio_to_recurrence; // set when value is a constant multiple
    bool absorbable = false;                      // ratio is 2^(2 alpha + 2 beta) for a declared (alpha, beta)
};

struct convention_resolution {
    bool resolved = false;
    int max_index = 0;
    std::optional<convention_candidate> assignment;

    // when unresolved: smallest n at which no declared candidate agrees on 1..n
    int counterexample_index = 0;
    std::optional<convention_candidate> closest;
    std::vector<std::string> closest_mismatches; // "toda vs subset-sum: <difference>"
    std::vector<convention_candidate> pairwise_toda_explicit; // candidates where only those two agree

    toda_poly recurrence_t2;
    std::vector<t2_reading> t2_readings;

    // extended search: the subset-sum family may use the z^2-negated map
    std::optional<convention_candidate> extended_assignment;

    // other conventions fixed empirically
    std::string determinant_variant;
    std::string equal_parameter_sign_law;
    bool equal_parameter_sign_law_holds = false;
    big_int coefficient_denominator = 1;

    [[nodiscard]] nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["status"] = resolved ? "resolved" : "unresolved";
        j["max_index"] = max_index;
        j["assignment"] = assignment ? assignment->to_json() : nlohmann::json(nullptr);
        if (!resolved) {
            nlohmann::json ce;
            ce["index"] = counterexample_index;
            ce["closest_candidate"] = closest ? closest->to_json() : nlohmann::json(nullptr);
            ce["mismatches"] = closest_mismatches;
            nlohmann::json pw = nlohmann::json::array();
            for (const auto &c : pairwise_toda_explicit) {
                pw.push_back(c.to_json());
            }
            ce["toda_explicit_agree_under"] = pw;
            j["minimal_counterexample"] = ce;
        }
        nlohmann::json t2;
        t2["recurrence"] = to_canonical_text(recurrence_t2);
        nlohmann::json readings = nlohmann::json::array();
        for (const auto &r : t2_readings) {
            readings.push_back({{"name", r.name},
                                {"formula", r.formula},
                                {"expanded", to_canonical_text(r.value)},
                                {"ratio_to_recurrence", r.ratio_to_recurrence ? nlohmann::json(r.ratio_to_recurrence->to_string()) : nlohmann::json(nullptr)},
                                {"absorbable_by_scale_law", r.absorbable}});
        }
        t2["closed_form_readings"] = readings;
        j["t2"] = t2;
        j["extended_search"] = {{"subset_sum_maps_added", {to_string(variable_map::affine_negated), to_string(variable_map::quadratic_negated)}},
                                {"assignment", extended_assignment ? extended_assignment->to_json() : nlohmann::json(nullptr)}};
        j["determinant_variant"] = determinant_variant;
        j["equal_parameter_sign_law"] = {{"law", equal_parameter_sign_law}, {"holds", equal_parameter_sign_law_holds}};
        j["coefficient_denominator"] = coefficient_denominator.get_str();
        return j;
    }
};

namespace detail
{

struct family_tables {
    int max_index;
    std::vector<toda_poly> toda; // T_0..T_max
    // explicit[dim][map][n], subset[shift+1][map][n]; index n = 0 unused
    std::map<std::pair<int, int>, std::vector<toda_poly>> explicit_sum;
    std::map<std::pair<int, int>, std::vector<std::optional<toda_poly>>> subset_sum;
};

inline toda_poly pow2(long e)
{
    const big_int p = big_int(big_int(1) << static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? toda_poly(rational(p)) : toda_poly(rational(big_int(1), p));
}

inline toda_poly scaled_toda(const family_tables &t, const convention_candidate &c, int n)
{
    return t.toda[static_cast<std::size_t>(n)] * pow2(static_cast<long>(c.alpha) * n * (n - 1) + static_cast<long>(c.beta) * n);
}

// Differences between the three families at index n, empty when all agree.
inline std::vector<std::string> mismatches(const family_tables &t, const convention_candidate &c, int n)
{
    std::vector<std::string> out;
    const auto T = scaled_toda(t, c, n);
    const auto &E = t.explicit_sum.at({static_cast<int>(c.dim), static_cast<int>(c.explicit_map)})[static_cast<std::size_t>(n)];
    const auto &G = t.subset_sum.at({c.index_shift, static_cast<int>(c.subset_sum_map)})[static_cast<std::size_t>(n)];
    auto describe = [&](const char *what, const toda_poly &x, const toda_poly &y) {
        if (!(x == y)) {
            out.push_back(std::string(what) + " at n=" + std::to_string(n) + ": difference " + to_canonical_text(x - y));
        }
    };
    describe("toda vs explicit", T, E);
    if (!G) {
        out.push_back("subset-sum undefined at n=" + std::to_string(n));
        return out;
    }
    describe("toda vs subset-sum", T, *G);
    describe("explicit vs subset-sum", E, *G);
    return out;
}

inline family_tables build_tables(int max_index, const std::vector<variable_map> &maps)
{
    family_tables t;
    t.max_index = max_index;
    t.toda = t_toda_sequence(max_index + 1);
    for (auto dim : {dim_convention::gl_n, dim_convention::gl_n_minus_1}) {
        std::vector<mpoly> raw{mpoly()};
        for (int n = 1; n <= max_index; ++n) {
            raw.push_back(u_dimension_sum(n, dim));
        }
        for (auto m : {variable_map::affine, variable_map::quadratic}) {
            std::vector<toda_poly> v{toda_poly()};
            for (int n = 1; n <= max_index; ++n) {
                v.push_back(to_toda_ring(raw[static_cast<std::size_t>(n)], m));
            }
            t.explicit_sum[{static_cast<int>(dim), static_cast<int>(m)}] = std::move(v);
        }
    }
    std::map<int, mpoly> halved; // index -> u_gen(0, index, 0) in (z^2, w^2)
    for (int s = -1; s <= 1; ++s) {
        for (auto m : maps) {
            std::vector<std::optional<toda_poly>> v{std::nullopt};
            for (int n = 1; n <= max_index; ++n) {
                const int idx = n + s;
                if (idx < -1) {
                    v.emplace_back(std::nullopt);
                    continue;
                }
                if (!halved.contains(idx)) {
                    halved[idx] = idx == -1 ? mpoly(1) : halve_zw(u_gen(0, idx, 0));
                }
                v.emplace_back(to_toda_ring(halved[idx], m));
            }
            t.subset_sum[{s, static_cast<int>(m)}] = std::move(v);
        }
    }
    return t;
}

inline std::vector<convention_candidate> candidates(const std::vector<variable_map> &subset_maps)
{
    std::vector<convention_candidate> out;
    for (auto dim : {dim_convention::gl_n, dim_convention::gl_n_minus_1}) {
        for (int alpha : {0, 1, -1}) {
            for (int beta : {0, 1, -1, 2, -2}) {
                for (int s : {-1, 0, 1}) {
                    for (auto em : {variable_map::affine, variable_map::quadratic}) {
                        for (auto gm : subset_maps) {
                            // declared space: one map shared by both families
                            const bool declared = gm == em;
                            const bool extended = (em == variable_map::affine && gm == variable_map::affine_negated) ||
                                                  (em == variable_map::quadratic && gm == variable_map::quadratic_negated);
                            if (!declared && !extended) {
                                continue;
                            }
                            out.push_back({s, alpha, beta, gm, em, dim});
                        }
                    }
                }
            }
        }
    }
    return out;
}

} // namespace detail

// Search the finite convention space for a normalization under which the Toda
// recurrence, the explicit GL-dimension sum and the zero-n subset sum agree.
inline convention_resolution resolve_conventions(const resolve_bounds &bounds = {})
{
    convention_resolution res;
    res.max_index = bounds.max_index;
    const std::vector<variable_map> declared_maps{variable_map::affine, variable_map::quadratic};
    const std::vector<variable_map> all_maps{variable_map::affine, variable_map::quadratic, variable_map::affine_negated,
                                             variable_map::quadratic_negated};
    const auto tables = detail::build_tables(std::max(bounds.max_index, 2), all_maps);

    auto agrees_up_to = [&](const convention_candidate &c, int upto) {
        for (int n = 1; n <= upto; ++n) {
            if (!detail::mismatches(tables, c, n).empty()) {
                return false;
            }
        }
        return true;
    };

    const auto declared = detail::candidates(declared_maps);
    for (const auto &c : declared) {
        if (agrees_up_to(c, bounds.max_index)) {
            res.resolved = true;
            res.assignment = c;
            break;
        }
    }
    if (!res.resolved) {
        // smallest n with no survivor
        std::vector<convention_candidate> survivors = declared;
        for (int n = 1; n <= bounds.max_index; ++n) {
            std::vector<convention_candidate> next;
            for (const auto &c : survivors) {
                if (detail::mismatches(tables, c, n).empty()) {
                    next.push_back(c);
                }
            }
            if (next.empty()) {
                res.counterexample_index = n;
                // closest: fewest mismatching pairs at n, first in search order
                std::size_t best = 99;
                for (const auto &c : survivors) {
                    const auto mm = detail::mismatches(tables, c, n);
                    if (mm.size() < best) {
                        best = mm.size();
                        res.closest = c;
                        res.closest_mismatches = mm;
                    }
                }
                for (const auto &c : declared) {
                    bool ok = true;
                    for (int k = 1; k <= bounds.max_index && ok; ++k) {
                        ok = detail::scaled_toda(tables, c, k) ==
                             tables.explicit_sum.at({static_cast<int>(c.dim), static_cast<int>(c.explicit_map)})[static_cast<std::size_t>(k)];
                    }
                    // record each (alpha, beta, map, dim) once
                    if (ok && c.index_shift == -1) {
                        res.pairwise_toda_explicit.push_back(c);
                    }
                }
                break;
            }
            survivors = std::move(next);
        }
    }

    for (const auto &c : detail::candidates(all_maps)) {
        if (c.subset_sum_map != c.explicit_map && agrees_up_to(c, bounds.max_index)) {
            res.extended_assignment = c;
            break;
        }
    }

    // closed-form T_2 under both parenthesizations
    res.recurrence_t2 = tables.toda[2];
    {
        const auto v = toda_poly::variable(0);
        const auto B1 = toda_poly::variable(1);
        const auto B2 = toda_poly::variable(2);
        const auto first = (toda_poly(1) - B1 * rational(4)) * (toda_poly(2) - v) * rational(1, 4);
        const auto second = (toda_poly(1) - B2 * rational(4)) * (toda_poly(2) + v) * rational(1, 4);
        res.t2_readings.push_back({"half-of-sum", "1/2*((1-4*b1^2)*(2-v)/4 + (1-4*b2^2)*(2+v)/4)", (first + second) * rational(1, 2), {}, false});
        res.t2_readings.push_back({"half-of-first", "1/2*(1-4*b1^2)*(2-v)/4 + (1-4*b2^2)*(2+v)/4", first * rational(1, 2) + second, {}, false});
        for (auto &r : res.t2_readings) {
            // constant ratio test: value - c * T2 == 0 with c from the leading terms
            const auto &t2 = res.recurrence_t2;
            const rational c = r.value.leading_term().coeff / t2.leading_term().coeff;
            if (r.value.leading_term().key == t2.leading_term().key && r.value == t2 * c) {
                r.ratio_to_recurrence = c;
                // 2^(2 alpha + 2 beta) with alpha in {0, +-1}, beta in {0, +-1, +-2}
                for (int alpha : {0, 1, -1}) {
                    for (int beta : {0, 1, -1, 2, -2}) {
                        const long e = 2L * alpha + 2L * beta;
                        if (detail::pow2(e).constant_term() == c) {
                            r.absorbable = true;
                        }
                    }
                }
            }
        }
    }

    // determinant reading
    for (const auto &variant : det_variant::all()) {
        bool ok = true;
        for (int n = 0; n <= bounds.det_bound && ok; ++n) {
            for (int m = 0; n + 2 * m <= bounds.det_bound && ok; ++m) {
                for (int k = 0; k <= n && ok; ++k) {
                    ok = u_gen_det(n, m, k, variant) == u_gen(n, m, k);
                }
            }
        }
        if (ok) {
            res.determinant_variant = variant.name();
            break;
        }
    }
    if (res.determinant_variant.empty()) {
        res.determinant_variant = "none";
    }

    // equal-parameter sign: u_gen(n,m,0)|_{b=a} = (-1)^C(m+1,2) x_factored(n,m)
    res.equal_parameter_sign_law = "(-1)^C(m+1,2)";
    res.equal_parameter_sign_law_holds = true;
    for (int n = 0; n <= bounds.factor_bound; ++n) {
        for (int m = 0; n + m <= bounds.factor_bound; ++m) {
            const auto x = x_factored(n, m);
            const bool neg = (m * (m + 1) / 2) % 2 != 0;
            if (!(set_b_equal_a(u_gen(n, m, 0)) == (neg ? -x : x))) {
                res.equal_parameter_sign_law_holds = false;
            }
        }
    }

    big_int den = 1;
    for (int n = 0; n <= bounds.integrality_bound; ++n) {
        for (int m = 0; n + 2 * m <= bounds.integrality_bound; ++m) {
            for (int k = 0; k <= n; ++k) {
                const big_int d = u_gen(n, m, k).denominator_lcm();
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
            }
        }
    }
    res.coefficient_denominator = den;
    return res;
}

} // namespace umemura

#endif
