#ifndef UMEMURA_MPOLY_HPP
#define UMEMURA_MPOLY_HPP

#include <umemura/rational.hpp>

#include <algorithm>
#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace umemura
{

// Variable sets. Each names its variables in a fixed order; the first
// variable is the most significant one in the lexicographic term order.
struct zwab_vars {
    static constexpr std::size_t size = 4;
    static constexpr std::array<std::string_view, 4> names{"z", "w", "a", "b"};
};

// Variables of the Toda recurrence: v and the squared parameters B1 = b1^2, B2 = b2^2.
struct toda_vars {
    static constexpr std::size_t size = 3;
    static constexpr std::array<std::string_view, 3> names{"v", "B1", "B2"};
};

// (z, w) together with the unsquared parameters b1, b2 (a = -4 b1^2, b = -4 b2^2).
struct zwb1b2_vars {
    static constexpr std::size_t size = 4;
    static constexpr std::array<std::string_view, 4> names{"z", "w", "b1", "b2"};
};

namespace detail
{

constexpr unsigned exp_bits = 16;
constexpr std::uint64_t exp_mask = (std::uint64_t{1} << exp_bits) - 1;
// Leave headroom so that adding two packed keys never carries between fields.
constexpr unsigned max_exponent = (1u << (exp_bits - 1)) - 1;

} // namespace detail

class not_divisible;

// Sparse multivariate polynomial over the rationals.
//
// Terms are kept sorted by packed exponent key (ascending), which is the
// lexicographic order with variable 0 most significant. No zero coefficient
// is ever stored, so structural equality is polynomial equality.
template <typename Vars>
class basic_mpoly
{
public:
    static constexpr std::size_t nvars = Vars::size;
    using exponents = std::array<unsigned, nvars>;
    using key_type = std::uint64_t;

    struct term {
        key_type key;
        rational coeff;
        friend bool operator==(const term &, const term &) = default;
    };

    basic_mpoly() = default;
    basic_mpoly(int c) : basic_mpoly(rational(c)) {}
    basic_mpoly(const rational &c)
    {
        if (!c.is_zero()) {
            m_terms.push_back({0, c});
        }
    }

    static basic_mpoly variable(std::size_t i, unsigned power = 1)
    {
        exponents e{};
        e.at(i) = power;
        return monomial(e, rational(1));
    }

    static basic_mpoly monomial(const exponents &e, const rational &c)
    {
        basic_mpoly p;
        if (!c.is_zero()) {
            p.m_terms.push_back({pack(e), c});
        }
        return p;
    }

    // Build from unsorted, possibly repeated terms.
    static basic_mpoly from_terms(std::vector<std::pair<exponents, rational>> terms)
    {
        std::map<key_type, rational> acc;
        for (auto &[e, c] : terms) {
            acc[pack(e)] += c;
        }
        basic_mpoly p;
        for (auto &[k, c] : acc) {
            if (!c.is_zero()) {
                p.m_terms.push_back({k, std::move(c)});
            }
        }
        return p;
    }

    static key_type pack(const exponents &e)
    {
        key_type k = 0;
        for (std::size_t i = 0; i < nvars; ++i) {
            if (e[i] > detail::max_exponent) {
                throw std::overflow_error("mpoly: exponent too large");
            }
            k = (k << detail::exp_bits) | e[i];
        }
        return k;
    }

    static exponents unpack(key_type k)
    {
        exponents e{};
        for (std::size_t i = nvars; i-- > 0;) {
            e[i] = static_cast<unsigned>(k & detail::exp_mask);
            k >>= detail::exp_bits;
        }
        return e;
    }

    static unsigned exponent_of(key_type k, std::size_t var)
    {
        return static_cast<unsigned>((k >> (detail::exp_bits * (nvars - 1 - var))) & detail::exp_mask);
    }

    [[nodiscard]] const std::vector<term> &terms() const { return m_terms; }
    [[nodiscard]] std::size_t size() const { return m_terms.size(); }
    [[nodiscard]] bool is_zero() const { return m_terms.empty(); }
    [[nodiscard]] bool is_constant() const { return m_terms.empty() || (m_terms.size() == 1 && m_terms[0].key == 0); }

    [[nodiscard]] rational constant_term() const
    {
        if (!m_terms.empty() && m_terms.front().key == 0) {
            return m_terms.front().coeff;
        }
        return rational(0);
    }

    [[nodiscard]] rational coeff(const exponents &e) const
    {
        auto k = pack(e);
        auto it = std::lower_bound(m_terms.begin(), m_terms.end(), k, [](const term &t, key_type v) { return t.key < v; });
        if (it != m_terms.end() && it->key == k) {
            return it->coeff;
        }
        return rational(0);
    }

    // Highest term in lex order.
    [[nodiscard]] const term &leading_term() const
    {
        if (m_terms.empty()) {
            throw std::domain_error("mpoly: zero polynomial has no leading term");
        }
        return m_terms.back();
    }

    [[nodiscard]] unsigned degree(std::size_t var) const
    {
        unsigned d = 0;
        for (const auto &t : m_terms) {
            d = std::max(d, exponent_of(t.key, var));
        }
        return d;
    }

    // Total degree restricted to the variables flagged in mask.
    [[nodiscard]] unsigned total_degree(std::array<bool, nvars> mask) const
    {
        unsigned d = 0;
        for (const auto &t : m_terms) {
            unsigned s = 0;
            for (std::size_t i = 0; i < nvars; ++i) {
                if (mask[i]) {
                    s += exponent_of(t.key, i);
                }
            }
            d = std::max(d, s);
        }
        return d;
    }

    [[nodiscard]] unsigned total_degree() const
    {
        std::array<bool, nvars> all;
        all.fill(true);
        return total_degree(all);
    }

    // Least common multiple of coefficient denominators.
    [[nodiscard]] big_int denominator_lcm() const
    {
        big_int l = 1;
        for (const auto &t : m_terms) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get().get_den_mpz_t());
        }
        return l;
    }

    [[nodiscard]] bool has_integer_coefficients() const
    {
        return std::all_of(m_terms.begin(), m_terms.end(), [](const term &t) { return t.coeff.is_integer(); });
    }

    basic_mpoly &operator+=(const basic_mpoly &o)
    {
        *this = combine(*this, o, false);
        return *this;
    }
    basic_mpoly &operator-=(const basic_mpoly &o)
    {
        *this = combine(*this, o, true);
        return *this;
    }
    basic_mpoly &operator*=(const basic_mpoly &o)
    {
        *this = multiply(*this, o);
        return *this;
    }
    basic_mpoly &operator*=(const rational &c)
    {
        if (c.is_zero()) {
            m_terms.clear();
        } else {
            for (auto &t : m_terms) {
                t.coeff *= c;
            }
        }
        return *this;
    }

    friend basic_mpoly operator+(const basic_mpoly &a, const basic_mpoly &b) { return combine(a, b, false); }
    friend basic_mpoly operator-(const basic_mpoly &a, const basic_mpoly &b) { return combine(a, b, true); }
    friend basic_mpoly operator*(const basic_mpoly &a, const basic_mpoly &b) { return multiply(a, b); }
    friend basic_mpoly operator*(basic_mpoly a, const rational &c) { return a *= c; }
    friend basic_mpoly operator*(const rational &c, basic_mpoly a) { return a *= c; }
    friend basic_mpoly operator-(basic_mpoly a)
    {
        for (auto &t : a.m_terms) {
            t.coeff = -t.coeff;
        }
        return a;
    }
    friend bool operator==(const basic_mpoly &, const basic_mpoly &) = default;

    [[nodiscard]] basic_mpoly pow(unsigned e) const
    {
        basic_mpoly r(1);
        basic_mpoly base = *this;
        while (e != 0) {
            if (e & 1u) {
                r *= base;
            }
            e >>= 1;
            if (e != 0) {
                base *= base;
            }
        }
        return r;
    }

    // Partial derivative with respect to variable var.
    [[nodiscard]] basic_mpoly derivative(std::size_t var) const
    {
        std::vector<term> out;
        const key_type unit = key_type{1} << (detail::exp_bits * (nvars - 1 - var));
        for (const auto &t : m_terms) {
            unsigned e = exponent_of(t.key, var);
            if (e != 0) {
                out.push_back({t.key - unit, t.coeff * rational(static_cast<long>(e))});
            }
        }
        // Subtracting the same unit from every key preserves the order.
        basic_mpoly p;
        p.m_terms = std::move(out);
        return p;
    }

    // Multiply by a monomial with unit coefficient.
    [[nodiscard]] basic_mpoly shift(const exponents &e) const
    {
        const key_type k = pack(e);
        basic_mpoly p = *this;
        for (auto &t : p.m_terms) {
            check_add(t.key, k);
            t.key += k;
        }
        return p;
    }

    // Replace variable var by the polynomial value.
    [[nodiscard]] basic_mpoly substitute(std::size_t var, const basic_mpoly &value) const
    {
        // group by the exponent of var, then combine with cached powers
        std::map<unsigned, std::vector<term>> groups;
        const unsigned shift_bits = detail::exp_bits * (nvars - 1 - var);
        for (const auto &t : m_terms) {
            unsigned e = exponent_of(t.key, var);
            groups[e].push_back({t.key & ~(detail::exp_mask << shift_bits), t.coeff});
        }
        basic_mpoly result;
        basic_mpoly power(1);
        unsigned current = 0;
        for (auto &[e, ts] : groups) {
            while (current < e) {
                power *= value;
                ++current;
            }
            basic_mpoly rest;
            std::sort(ts.begin(), ts.end(), [](const term &x, const term &y) { return x.key < y.key; });
            rest.m_terms = std::move(ts);
            result += rest * power;
        }
        return result;
    }

    // Evaluate at numeric values (double, long double, ...).
    template <typename T>
    [[nodiscard]] T evaluate(const std::array<T, nvars> &values) const
    {
        T sum = 0;
        for (const auto &t : m_terms) {
            T v;
            if constexpr (std::is_same_v<T, long double>) {
                v = t.coeff.to_long_double();
            } else {
                v = static_cast<T>(t.coeff.to_double());
            }
            for (std::size_t i = 0; i < nvars; ++i) {
                unsigned e = exponent_of(t.key, i);
                for (unsigned j = 0; j < e; ++j) {
                    v *= values[i];
                }
            }
            sum += v;
        }
        return sum;
    }

    // Exact evaluation of some variables at rational points; the evaluated
    // variables disappear (exponent 0).
    [[nodiscard]] basic_mpoly evaluate_at(std::size_t var, const rational &value) const
    {
        return substitute(var, basic_mpoly(value));
    }

    // Human-readable form, highest terms first; canonical text lives in serialize.hpp.
    [[nodiscard]] std::string debug_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string s;
        for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
            if (!s.empty()) {
                s += " + ";
            }
            s += it->coeff.to_string();
            auto e = unpack(it->key);
            for (std::size_t i = 0; i < nvars; ++i) {
                if (e[i] != 0) {
                    s += "*";
                    s += Vars::names[i];
                    if (e[i] != 1) {
                        s += "^" + std::to_string(e[i]);
                    }
                }
            }
        }
        return s;
    }

    // Internal: adopt already sorted, zero-free terms.
    static basic_mpoly from_sorted(std::vector<term> ts)
    {
        basic_mpoly p;
        p.m_terms = std::move(ts);
        return p;
    }

private:
    static void check_add(key_type a, key_type b)
    {
        for (std::size_t i = 0; i < nvars; ++i) {
            if (exponent_of(a, i) + exponent_of(b, i) > detail::max_exponent) {
                throw std::overflow_error("mpoly: exponent overflow");
            }
        }
    }

    static basic_mpoly combine(const basic_mpoly &a, const basic_mpoly &b, bool subtract)
    {
        std::vector<term> out;
        out.reserve(a.m_terms.size() + b.m_terms.size());
        auto i = a.m_terms.begin();
        auto j = b.m_terms.begin();
        while (i != a.m_terms.end() || j != b.m_terms.end()) {
            if (j == b.m_terms.end() || (i != a.m_terms.end() && i->key < j->key)) {
                out.push_back(*i++);
            } else if (i == a.m_terms.end() || j->key < i->key) {
                out.push_back({j->key, subtract ? -j->coeff : j->coeff});
                ++j;
            } else {
                rational c = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
                if (!c.is_zero()) {
                    out.push_back({i->key, std::move(c)});
                }
                ++i;
                ++j;
            }
        }
        basic_mpoly p;
        p.m_terms = std::move(out);
        return p;
    }

    // Clears denominators, multiplies over the integers into a dense box when
    // it is small enough (hash map otherwise), then restores the scale.
    static basic_mpoly multiply(const basic_mpoly &a, const basic_mpoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (a.is_constant()) {
            return b * a.constant_term();
        }
        if (b.is_constant()) {
            return a * b.constant_term();
        }
        const big_int da = a.denominator_lcm();
        const big_int db = b.denominator_lcm();
        auto to_int = [](const basic_mpoly &p, const big_int &d) {
            std::vector<big_int> v;
            v.reserve(p.m_terms.size());
            for (const auto &t : p.m_terms) {
                v.push_back(t.coeff.num() * (d / t.coeff.den()));
            }
            return v;
        };
        const auto ia = to_int(a, da);
        const auto ib = to_int(b, db);

        exponents maxa{}, maxb{}, mina{}, minb{};
        mina.fill(detail::max_exponent);
        minb.fill(detail::max_exponent);
        for (const auto &t : a.m_terms) {
            for (std::size_t v = 0; v < nvars; ++v) {
                maxa[v] = std::max(maxa[v], exponent_of(t.key, v));
                mina[v] = std::min(mina[v], exponent_of(t.key, v));
            }
        }
        for (const auto &t : b.m_terms) {
            for (std::size_t v = 0; v < nvars; ++v) {
                maxb[v] = std::max(maxb[v], exponent_of(t.key, v));
                minb[v] = std::min(minb[v], exponent_of(t.key, v));
            }
        }
        exponents lo{}, extent{};
        std::uint64_t box = 1;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (maxa[v] + maxb[v] > detail::max_exponent) {
                throw std::overflow_error("mpoly: exponent overflow in product");
            }
            lo[v] = mina[v] + minb[v];
            extent[v] = maxa[v] + maxb[v] - lo[v] + 1;
            box *= extent[v];
        }
        const big_int scale = da * db;
        std::vector<term> out;

        const std::uint64_t product_count = static_cast<std::uint64_t>(a.size()) * b.size();
        if (box <= 4'000'000 && box <= 8 * product_count + 1024) {
            // dense accumulation; index = mixed radix over the box
            std::vector<std::uint64_t> stride(nvars);
            {
                std::uint64_t s = 1;
                for (std::size_t v = nvars; v-- > 0;) {
                    stride[v] = s;
                    s *= extent[v];
                }
            }
            std::vector<std::uint64_t> offa(a.size()), offb(b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                auto e = unpack(a.m_terms[i].key);
                std::uint64_t o = 0;
                for (std::size_t v = 0; v < nvars; ++v) {
                    o += (e[v] - mina[v]) * stride[v];
                }
                offa[i] = o;
            }
            for (std::size_t j = 0; j < b.size(); ++j) {
                auto e = unpack(b.m_terms[j].key);
                std::uint64_t o = 0;
                for (std::size_t v = 0; v < nvars; ++v) {
                    o += (e[v] - minb[v]) * stride[v];
                }
                offb[j] = o;
            }
            std::vector<big_int> acc(box);
            std::vector<bool> touched(box, false);
            for (std::size_t i = 0; i < a.size(); ++i) {
                for (std::size_t j = 0; j < b.size(); ++j) {
                    const auto idx = offa[i] + offb[j];
                    mpz_addmul(acc[idx].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
                    touched[idx] = true;
                }
            }
            // mixed-radix order with variable 0 most significant is the key order
            for (std::uint64_t idx = 0; idx < box; ++idx) {
                if (!touched[idx] || acc[idx] == 0) {
                    continue;
                }
                exponents e{};
                std::uint64_t r = idx;
                for (std::size_t v = nvars; v-- > 0;) {
                    e[v] = static_cast<unsigned>(r % extent[v]) + lo[v];
                    r /= extent[v];
                }
                out.push_back({pack(e), rational(acc[idx], scale)});
            }
        } else {
            std::unordered_map<key_type, big_int> acc;
            acc.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(product_count, 1u << 22)));
            for (std::size_t i = 0; i < a.size(); ++i) {
                for (std::size_t j = 0; j < b.size(); ++j) {
                    auto &slot = acc[a.m_terms[i].key + b.m_terms[j].key];
                    mpz_addmul(slot.get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
                }
            }
            out.reserve(acc.size());
            for (auto &[k, c] : acc) {
                if (c != 0) {
                    out.push_back({k, rational(c, scale)});
                }
            }
            std::sort(out.begin(), out.end(), [](const term &x, const term &y) { return x.key < y.key; });
        }
        basic_mpoly p;
        p.m_terms = std::move(out);
        return p;
    }

    std::vector<term> m_terms;
};

using mpoly = basic_mpoly<zwab_vars>;
using toda_poly = basic_mpoly<toda_vars>;
using b1b2_poly = basic_mpoly<zwb1b2_vars>;

namespace var
{
// Variable indices of the (z, w, a, b) ring.
inline constexpr std::size_t z = 0;
inline constexpr std::size_t w = 1;
inline constexpr std::size_t a = 2;
inline constexpr std::size_t b = 3;
} // namespace var

inline mpoly z_var() { return mpoly::variable(var::z); }
inline mpoly w_var() { return mpoly::variable(var::w); }
inline mpoly a_var() { return mpoly::variable(var::a); }
inline mpoly b_var() { return mpoly::variable(var::b); }

// Thrown by exact_div when the divisor does not divide the dividend.
class not_divisible : public std::domain_error
{
public:
    explicit not_divisible(std::string remainder_text)
        : std::domain_error("exact division failed; remainder " + remainder_text), m_remainder(std::move(remainder_text))
    {
    }
    [[nodiscard]] const std::string &remainder() const { return m_remainder; }

private:
    std::string m_remainder;
};

// Multivariate division by a single divisor in lex order. With one divisor
// the remainder is zero exactly when q divides p.
template <typename Vars>
std::pair<basic_mpoly<Vars>, basic_mpoly<Vars>> divide_with_remainder(const basic_mpoly<Vars> &p, const basic_mpoly<Vars> &q)
{
    using poly = basic_mpoly<Vars>;
    using key_type = typename poly::key_type;
    if (q.is_zero()) {
        throw std::domain_error("exact_div: division by zero");
    }
    const auto &lt = q.leading_term();
    const auto lexp = poly::unpack(lt.key);

    // work map ordered by key, highest processed first
    std::map<key_type, rational> work;
    for (const auto &t : p.terms()) {
        work.emplace(t.key, t.coeff);
    }
    std::vector<typename poly::term> quot, rem;
    const rational inv_lc = rational(1) / lt.coeff;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        const key_type k = it->first;
        rational c = it->second;
        work.erase(it);
        auto e = poly::unpack(k);
        bool divides = true;
        for (std::size_t v = 0; v < poly::nvars; ++v) {
            if (e[v] < lexp[v]) {
                divides = false;
                break;
            }
        }
        if (!divides) {
            rem.push_back({k, c});
            continue;
        }
        const key_type qk = k - lt.key;
        const rational qc = c * inv_lc;
        quot.push_back({qk, qc});
        // subtract qc * x^qk * (q - lt)
        const auto &qt = q.terms();
        for (std::size_t i = 0; i + 1 < qt.size(); ++i) {
            auto &slot = work[qt[i].key + qk];
            slot -= qc * qt[i].coeff;
            if (slot.is_zero()) {
                work.erase(qt[i].key + qk);
            }
        }
    }
    std::reverse(quot.begin(), quot.end());
    std::reverse(rem.begin(), rem.end());
    return {poly::from_sorted(std::move(quot)), poly::from_sorted(std::move(rem))};
}

// Exact quotient p / q; throws not_divisible carrying the remainder.
template <typename Vars>
basic_mpoly<Vars> exact_div(const basic_mpoly<Vars> &p, const basic_mpoly<Vars> &q)
{
    auto [quot, rem] = divide_with_remainder(p, q);
    if (!rem.is_zero()) {
        throw not_divisible(rem.debug_string());
    }
    return quot;
}

// Map a polynomial into another variable set of the same arity by position.
template <typename To, typename From>
basic_mpoly<To> rename_vars(const basic_mpoly<From> &p)
{
    static_assert(To::size == From::size);
    std::vector<typename basic_mpoly<To>::term> ts;
    ts.reserve(p.size());
    for (const auto &t : p.terms()) {
        ts.push_back({t.key, t.coeff});
    }
    return basic_mpoly<To>::from_sorted(std::move(ts));
}

// Substitute every variable of p by a polynomial in another variable set.
template <typename To, typename From>
basic_mpoly<To> compose(const basic_mpoly<From> &p, const std::array<basic_mpoly<To>, From::size> &images)
{
    std::array<std::vector<basic_mpoly<To>>, From::size> powers;
    for (std::size_t v = 0; v < From::size; ++v) {
        powers[v].emplace_back(1);
    }
    auto power = [&](std::size_t v, unsigned e) -> const basic_mpoly<To> & {
        while (powers[v].size() <= e) {
            powers[v].push_back(powers[v].back() * images[v]);
        }
        return powers[v][e];
    };
    basic_mpoly<To> result;
    for (const auto &t : p.terms()) {
        const auto e = basic_mpoly<From>::unpack(t.key);
        basic_mpoly<To> term(t.coeff);
        for (std::size_t v = 0; v < From::size; ++v) {
            if (e[v] != 0) {
                term *= power(v, e[v]);
            }
        }
        result += term;
    }
    return result;
}

} // namespace umemura

#endif
