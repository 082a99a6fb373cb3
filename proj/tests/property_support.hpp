// Randomized property checks shared by the unit tests and the acceptance run.
// Each check returns an empty string on success, otherwise a witness.
#ifndef UMEMURA_TESTS_PROPERTY_SUPPORT_HPP
#define UMEMURA_TESTS_PROPERTY_SUPPORT_HPP

#include <umemura/umemura.hpp>

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace props
{

using namespace umemura;

inline constexpr std::uint32_t default_seed = 20240611u;

inline rational random_rational(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return {static_cast<long long>(num(rng)), static_cast<long long>(den(rng))};
}

inline mpoly random_poly(std::mt19937 &rng, int max_terms = 6, unsigned max_exp = 3)
{
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<unsigned> ex(0, max_exp);
    std::vector<std::pair<mpoly::exponents, rational>> terms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        terms.push_back({{ex(rng), ex(rng), ex(rng), ex(rng)}, random_rational(rng)});
    }
    return mpoly::from_terms(std::move(terms));
}

inline mpoly flip_w(const mpoly &p) { return p.substitute(var::w, -w_var()); }

inline std::string ring_axioms(std::uint32_t seed, int trials = 200)
{
    std::mt19937 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const auto f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        if (!((f + g) + h == f + (g + h))) {
            return "addition not associative at trial " + std::to_string(i);
        }
        if (!(f + g == g + f)) {
            return "addition not commutative at trial " + std::to_string(i);
        }
        if (!((f * g) * h == f * (g * h))) {
            return "multiplication not associative at trial " + std::to_string(i);
        }
        if (!(f * g == g * f)) {
            return "multiplication not commutative at trial " + std::to_string(i);
        }
        if (!(f * (g + h) == f * g + f * h)) {
            return "distributivity fails at trial " + std::to_string(i);
        }
        if (!(f + mpoly() == f) || !(f * mpoly(1) == f) || !(f - f).is_zero()) {
            return "identity elements fail at trial " + std::to_string(i);
        }
    }
    return {};
}

inline std::string leibniz(std::uint32_t seed, int trials = 200)
{
    std::mt19937 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const auto f = random_poly(rng), g = random_poly(rng);
        if (!(delta(f * g) == delta(f) * g + f * delta(g))) {
            return "delta(fg) != f'g + fg' for f=" + to_canonical_text(f) + ", g=" + to_canonical_text(g);
        }
    }
    return {};
}

inline std::string hirota_symmetry(std::uint32_t seed, int trials = 150)
{
    std::mt19937 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const auto f = random_poly(rng), g = random_poly(rng);
        if (!(hirota2(f, g) == hirota2(g, f))) {
            return "D^2 f.g != D^2 g.f for f=" + to_canonical_text(f) + ", g=" + to_canonical_text(g);
        }
    }
    return {};
}

inline std::string hirota_bilinearity(std::uint32_t seed, int trials = 150)
{
    std::mt19937 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const auto f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        const auto c = random_rational(rng);
        if (!(hirota2(f + h * c, g) == hirota2(f, g) + hirota2(h, g) * c)) {
            return "D^2 not linear in the first slot at trial " + std::to_string(i);
        }
        if (!(hirota2(f, g + h * c) == hirota2(f, g) + hirota2(f, h) * c)) {
            return "D^2 not linear in the second slot at trial " + std::to_string(i);
        }
    }
    return {};
}

// D^2 is quadratic in delta, and w -> -w negates delta; the result must not
// depend on the branch of w, nor on reducing the inputs modulo w^2 - z^2 - 1.
inline std::string hirota_branch_invariance(std::uint32_t seed, int trials = 150)
{
    std::mt19937 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const auto f = random_poly(rng), g = random_poly(rng);
        if (!(hirota2(flip_w(f), flip_w(g)) == flip_w(hirota2(f, g)))) {
            return "w -> -w does not commute with D^2 at trial " + std::to_string(i);
        }
        if (!(reduce_mod_relation(hirota2(reduce_mod_relation(f), reduce_mod_relation(g))) == reduce_mod_relation(hirota2(f, g)))) {
            return "D^2 does not descend to the quotient ring at trial " + std::to_string(i);
        }
    }
    return {};
}

inline std::string reduce_idempotence(std::uint32_t seed, int trials = 200)
{
    std::mt19937 rng(seed);
    const auto rel = w_var() * w_var() - z_var() * z_var() - mpoly(1);
    for (int i = 0; i < trials; ++i) {
        const auto f = random_poly(rng, 6, 5), g = random_poly(rng, 3, 2);
        const auto r = reduce_mod_relation(f);
        if (!(reduce_mod_relation(r) == r)) {
            return "reduce not idempotent for " + to_canonical_text(f);
        }
        if (r.degree(var::w) > 1) {
            return "reduced form has w-degree > 1 for " + to_canonical_text(f);
        }
        if (!reduce_mod_relation(rel * g).is_zero()) {
            return "multiple of the relation does not reduce to 0 at trial " + std::to_string(i);
        }
        if (!(reduce_mod_relation(f + rel * g) == r)) {
            return "reduce depends on the representative at trial " + std::to_string(i);
        }
    }
    return {};
}

inline std::string dcoef_complement_symmetry(int max_weight = 10)
{
    for (int n = 0; n <= max_weight; ++n) {
        for (int m = 0; n + 2 * m <= max_weight; ++m) {
            const ground_set g(n, m);
            for (std::uint64_t mask = 0; mask <= g.full_mask(); ++mask) {
                const index_subset I(g, mask);
                if (dcoef(I) != dcoef(I.complement())) {
                    return "d(I) != d(complement) at n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", mask=" + std::to_string(mask);
                }
            }
        }
    }
    return {};
}

// Number of semistandard tableaux of shape lam with entries in 1..n.
inline long ssyt_count(const std::vector<int> &lam, int n)
{
    std::vector<std::vector<int>> t;
    for (int r : lam) {
        t.emplace_back(static_cast<std::size_t>(r), 0);
    }
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < lam.size(); ++r) {
        for (int c = 0; c < lam[r]; ++c) {
            cells.emplace_back(static_cast<int>(r), c);
        }
    }
    long count = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) {
            lo = std::max(lo, t[r][c - 1]);
        }
        if (r > 0) {
            lo = std::max(lo, t[r - 1][c] + 1);
        }
        for (int v = lo; v <= n; ++v) {
            t[r][c] = v;
            fill(idx + 1);
        }
    };
    fill(0);
    return count;
}

inline void partitions_of(int size, int max_part, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (size == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(size, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(size - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::string gl_dim_matches_ssyt(int max_size = 6, int max_n = 4)
{
    for (int s = 0; s <= max_size; ++s) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_of(s, s, cur, parts);
        for (const auto &lam : parts) {
            for (int n = 1; n <= max_n; ++n) {
                if (static_cast<int>(lam.size()) > n) {
                    continue;
                }
                const long brute = ssyt_count(lam, n);
                const auto dim = gl_dim(n, partition(lam));
                if (dim != brute) {
                    std::string l;
                    for (int p : lam) {
                        l += (l.empty() ? "" : ",") + std::to_string(p);
                    }
                    return "gl_dim(" + std::to_string(n) + ", (" + l + ")) = " + dim.get_str() + " but SSYT count is " + std::to_string(brute);
                }
            }
        }
    }
    return {};
}

} // namespace props

#endif
