#ifndef UMEMURA_CALCULUS_HPP
#define UMEMURA_CALCULUS_HPP

#include <umemura/mpoly.hpp>

#include <map>
#include <vector>

namespace umemura
{

// Rewrite every w^2 as z^2 + 1, i.e. reduce modulo w^2 - z^2 - 1. The result
// has w-degree at most one in every term and is the canonical representative
// of the residue class.
//
// Works for any variable set whose first two variables are (z, w).
template <typename Vars>
basic_mpoly<Vars> reduce_mod_relation(const basic_mpoly<Vars> &p)
{
    using poly = basic_mpoly<Vars>;
    static_assert(Vars::size >= 2);
    std::map<typename poly::key_type, rational> acc;
    for (const auto &t : p.terms()) {
        auto e = poly::unpack(t.key);
        const unsigned s = e[1] / 2;
        if (s == 0) {
            acc[t.key] += t.coeff;
            continue;
        }
        // z^p w^(2s+r) -> z^p w^r sum_j C(s,j) z^(2j)
        e[1] %= 2;
        const unsigned z0 = e[0];
        for (unsigned j = 0; j <= s; ++j) {
            e[0] = z0 + 2 * j;
            acc[poly::pack(e)] += t.coeff * rational(binomial(s, j));
        }
    }
    std::vector<typename poly::term> out;
    out.reserve(acc.size());
    for (auto &[k, c] : acc) {
        if (!c.is_zero()) {
            out.push_back({k, std::move(c)});
        }
    }
    return poly::from_sorted(std::move(out));
}

// The derivation d/dx written in (z, w): (w dp/dz + z dp/dw) / 2.
template <typename Vars>
basic_mpoly<Vars> delta(const basic_mpoly<Vars> &p)
{
    using poly = basic_mpoly<Vars>;
    const auto zv = poly::variable(0);
    const auto wv = poly::variable(1);
    return (wv * p.derivative(0) + zv * p.derivative(1)) * rational(1, 2);
}

// Second Hirota derivative D_x^2 f.g = f''g - 2f'g' + fg'' with ' = delta.
template <typename Vars>
basic_mpoly<Vars> hirota2(const basic_mpoly<Vars> &f, const basic_mpoly<Vars> &g)
{
    const auto df = delta(f);
    if (&f == &g || f == g) {
        // D^2 f.f = 2(f f'' - f'^2)
        return (f * delta(df) - df * df) * rational(2);
    }
    const auto dg = delta(g);
    return delta(df) * g - df * dg * rational(2) + f * delta(dg);
}

} // namespace umemura

#endif
