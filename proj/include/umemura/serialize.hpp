#ifndef UMEMURA_SERIALIZE_HPP
#define UMEMURA_SERIALIZE_HPP

#include <umemura/families.hpp>
#include <umemura/mpoly.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace umemura
{

class parse_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail
{

template <typename Vars>
std::vector<const typename basic_mpoly<Vars>::term *> canonical_order(const basic_mpoly<Vars> &p)
{
    using poly = basic_mpoly<Vars>;
    std::vector<const typename poly::term *> ts;
    for (const auto &t : p.terms()) {
        ts.push_back(&t);
    }
    // total degree ascending, then exponent vector ascending (lex, first variable most significant)
    std::stable_sort(ts.begin(), ts.end(), [](const auto *x, const auto *y) {
        const auto ex = poly::unpack(x->key);
        const auto ey = poly::unpack(y->key);
        const auto dx = std::accumulate(ex.begin(), ex.end(), 0u);
        const auto dy = std::accumulate(ey.begin(), ey.end(), 0u);
        if (dx != dy) {
            return dx < dy;
        }
        return x->key < y->key;
    });
    return ts;
}

} // namespace detail

// Canonical text: "c*v^e*..." joined by " + ", coefficient always explicit
// ("p/q" or "n"), variables in declaration order, "0" for the zero polynomial.
template <typename Vars>
std::string to_canonical_text(const basic_mpoly<Vars> &p)
{
    using poly = basic_mpoly<Vars>;
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto *t : detail::canonical_order(p)) {
        if (!s.empty()) {
            s += " + ";
        }
        s += t->coeff.to_string();
        const auto e = poly::unpack(t->key);
        for (std::size_t v = 0; v < poly::nvars; ++v) {
            if (e[v] == 0) {
                continue;
            }
            s += "*";
            s += Vars::names[v];
            if (e[v] > 1) {
                s += "^" + std::to_string(e[v]);
            }
        }
    }
    return s;
}

// Parses canonical text and the looser forms people type by hand:
// implicit coefficients ("z^2"), '-' between terms, spaces anywhere,
// variables in any order and repeated ("z*z").
template <typename Vars>
basic_mpoly<Vars> parse_polynomial(std::string_view text)
{
    using poly = basic_mpoly<Vars>;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    auto fail = [&](const std::string &what) -> parse_error {
        return parse_error("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    };
    auto read_uint = [&]() -> std::string {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        return std::string(text.substr(start, pos - start));
    };
    auto read_var = [&]() -> int {
        for (std::size_t v = 0; v < Vars::size; ++v) {
            const auto name = Vars::names[v];
            if (text.substr(pos, name.size()) == name) {
                const std::size_t after = pos + name.size();
                // longest match wins: "b1" must not be read as "b" then "1"
                if (after < text.size() && std::isalnum(static_cast<unsigned char>(text[after]))) {
                    continue;
                }
                pos = after;
                return static_cast<int>(v);
            }
        }
        return -1;
    };

    std::vector<std::pair<typename poly::exponents, rational>> terms;
    skip();
    if (pos == text.size()) {
        throw fail("empty input");
    }
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size()) {
            break;
        }
        bool negative = false;
        if (!first) {
            if (text[pos] == '+') {
                ++pos;
            } else if (text[pos] == '-') {
                negative = true;
                ++pos;
            } else {
                throw fail("expected '+' or '-'");
            }
            skip();
        }
        // optional sign on the coefficient itself ("+ -3*z")
        while (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative ^= text[pos] == '-';
            ++pos;
            skip();
        }
        first = false;
        rational coeff(1);
        typename poly::exponents e{};
        bool have_factor = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string num = read_uint();
            skip();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip();
                const std::string den = read_uint();
                if (den.empty()) {
                    throw fail("missing denominator");
                }
                num += "/" + den;
            }
            try {
                coeff = rational::parse(num);
            } catch (const std::exception &ex) {
                throw fail(ex.what());
            }
            have_factor = true;
        }
        while (true) {
            skip();
            if (have_factor) {
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    skip();
                } else {
                    break;
                }
            }
            const int v = read_var();
            if (v < 0) {
                throw fail("expected a variable");
            }
            unsigned power = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                const std::string digits = read_uint();
                if (digits.empty()) {
                    throw fail("missing exponent");
                }
                power = static_cast<unsigned>(std::stoul(digits));
            }
            e[static_cast<std::size_t>(v)] += power;
            have_factor = true;
        }
        terms.emplace_back(e, negative ? -coeff : coeff);
    }
    return poly::from_terms(std::move(terms));
}

// [{"coeff": "p/q", "exps": [e0, e1, ...]}, ...] in canonical order.
template <typename Vars>
nlohmann::json to_json(const basic_mpoly<Vars> &p)
{
    using poly = basic_mpoly<Vars>;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto *t : detail::canonical_order(p)) {
        const auto e = poly::unpack(t->key);
        arr.push_back({{"coeff", t->coeff.to_string()}, {"exps", std::vector<unsigned>(e.begin(), e.end())}});
    }
    return arr;
}

template <typename Vars>
basic_mpoly<Vars> from_json(const nlohmann::json &j)
{
    using poly = basic_mpoly<Vars>;
    if (!j.is_array()) {
        throw parse_error("polynomial json: expected an array of terms");
    }
    std::vector<std::pair<typename poly::exponents, rational>> terms;
    for (const auto &t : j) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") || !t["exps"].is_array() ||
            t["exps"].size() != Vars::size) {
            throw parse_error("polynomial json: malformed term " + t.dump());
        }
        typename poly::exponents e{};
        for (std::size_t v = 0; v < Vars::size; ++v) {
            e[v] = t["exps"][v].get<unsigned>();
        }
        rational c;
        try {
            c = rational::parse(t["coeff"].get<std::string>());
        } catch (const std::exception &ex) {
            throw parse_error(std::string("polynomial json: bad coefficient: ") + ex.what());
        }
        terms.emplace_back(e, c);
    }
    return poly::from_terms(std::move(terms));
}

namespace detail
{

inline std::string latex_power(const std::string &base, long e)
{
    if (e == 0) {
        return "";
    }
    if (e == 1) {
        return base;
    }
    return base + "^{" + std::to_string(e) + "}";
}

inline std::string latex_rational(const rational &r)
{
    if (r.is_integer()) {
        return r.to_string();
    }
    const std::string sign = r.sign() < 0 ? "-" : "";
    return sign + "\\frac{" + abs(r).num().get_str() + "}{" + r.den().get_str() + "}";
}

// a_i = overline{a}_i overline{a}_{i-2} ...
inline std::string latex_param_product(char sym, int i)
{
    std::string s;
    for (int k = i % 2 == 0 ? 2 : 1; k <= i; k += 2) {
        s += "\\overline{";
        s += sym;
        s += "}_{" + std::to_string(k) + "}";
    }
    return s;
}

} // namespace detail

// Expanded polynomial in LaTeX.
template <typename Vars>
std::string to_latex(const basic_mpoly<Vars> &p)
{
    using poly = basic_mpoly<Vars>;
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto *t : detail::canonical_order(p)) {
        const auto e = poly::unpack(t->key);
        const bool is_const = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        rational c = t->coeff;
        if (!first) {
            s += c.sign() < 0 ? " - " : " + ";
            c = abs(c);
        } else if (c.sign() < 0 && !is_const && c == rational(-1)) {
            s += "-";
            c = rational(1);
        }
        first = false;
        if (is_const || c != rational(1)) {
            s += detail::latex_rational(c);
        }
        for (std::size_t v = 0; v < poly::nvars; ++v) {
            s += detail::latex_power(std::string(Vars::names[v]), e[v]);
        }
    }
    return s;
}

// U_{n,m}^{(k)} as its subset sum with each parameter product written as
// overlined factors, e.g. 3 \overline{a}_{1}\overline{b}_{2} z w^{2}.
inline std::string u_gen_latex(int n, int m, int k, prefactor_sign sign = prefactor_sign::j_minus_i)
{
    const auto terms = detail::u_gen_terms(n, m, k, sign);
    std::string s;
    bool first = true;
    for (const auto &t : terms) {
        rational c = t.coeff;
        if (!first) {
            s += c.sign() < 0 ? " - " : " + ";
            c = abs(c);
        } else if (c.sign() < 0) {
            s += "-";
            c = abs(c);
        }
        first = false;
        std::string factors;
        for (int i : t.a_indices) {
            factors += detail::latex_param_product('a', i);
        }
        for (int i : t.b_indices) {
            factors += detail::latex_param_product('b', i);
        }
        const std::string mono = detail::latex_power("z", t.z_exp) + detail::latex_power("w", t.w_exp);
        if (c != rational(1) || (factors.empty() && mono.empty())) {
            s += detail::latex_rational(c);
        }
        s += factors;
        if (!mono.empty()) {
            s += (factors.empty() && c == rational(1)) ? mono : " " + mono;
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace umemura

#endif
