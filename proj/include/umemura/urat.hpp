#ifndef UMEMURA_URAT_HPP
#define UMEMURA_URAT_HPP

#include <umemura/rational.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umemura
{

// Dense univariate polynomial over the rationals; coeffs[i] multiplies x^i.
// No trailing zeros, so the zero polynomial has no coefficients.
class upoly
{
public:
    upoly() = default;
    upoly(const rational &c)
    {
        if (!c.is_zero()) {
            m_coeffs.push_back(c);
        }
    }
    upoly(int c) : upoly(rational(c)) {}
    explicit upoly(std::vector<rational> coeffs) : m_coeffs(std::move(coeffs)) { trim(); }

    static upoly x() { return upoly(std::vector<rational>{rational(0), rational(1)}); }

    // x + c
    static upoly linear(const rational &c) { return upoly(std::vector<rational>{c, rational(1)}); }

    [[nodiscard]] const std::vector<rational> &coeffs() const { return m_coeffs; }
    [[nodiscard]] bool is_zero() const { return m_coeffs.empty(); }
    // -1 for the zero polynomial
    [[nodiscard]] int degree() const { return static_cast<int>(m_coeffs.size()) - 1; }
    [[nodiscard]] rational coeff(std::size_t i) const { return i < m_coeffs.size() ? m_coeffs[i] : rational(0); }
    [[nodiscard]] rational leading() const { return m_coeffs.empty() ? rational(0) : m_coeffs.back(); }

    [[nodiscard]] rational operator()(const rational &x) const
    {
        rational r;
        for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
            r = r * x + *it;
        }
        return r;
    }

    upoly &operator+=(const upoly &o)
    {
        if (o.m_coeffs.size() > m_coeffs.size()) {
            m_coeffs.resize(o.m_coeffs.size());
        }
        for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
            m_coeffs[i] += o.m_coeffs[i];
        }
        trim();
        return *this;
    }
    upoly &operator-=(const upoly &o) { return *this += -o; }
    friend upoly operator+(upoly a, const upoly &b) { return a += b; }
    friend upoly operator-(upoly a, const upoly &b) { return a -= b; }
    friend upoly operator-(upoly a)
    {
        for (auto &c : a.m_coeffs) {
            c = -c;
        }
        return a;
    }
    friend upoly operator*(const upoly &a, const upoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<rational> r(a.m_coeffs.size() + b.m_coeffs.size() - 1);
        for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
            for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
                r[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
        return upoly(std::move(r));
    }
    upoly &operator*=(const upoly &o) { return *this = *this * o; }
    friend bool operator==(const upoly &, const upoly &) = default;

    // Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<upoly, upoly> divmod(const upoly &a, const upoly &b)
    {
        if (b.is_zero()) {
            throw std::domain_error("upoly: division by zero");
        }
        std::vector<rational> rem = a.m_coeffs;
        const int db = b.degree();
        std::vector<rational> quot(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
        const rational inv = rational(1) / b.leading();
        for (int d = a.degree(); d >= db; --d) {
            const rational c = rem[static_cast<std::size_t>(d)] * inv;
            if (c.is_zero()) {
                continue;
            }
            quot[static_cast<std::size_t>(d - db)] = c;
            for (int i = 0; i <= db; ++i) {
                rem[static_cast<std::size_t>(d - db + i)] -= c * b.m_coeffs[static_cast<std::size_t>(i)];
            }
        }
        return {upoly(std::move(quot)), upoly(std::move(rem))};
    }

    [[nodiscard]] upoly monic() const
    {
        if (is_zero()) {
            return {};
        }
        upoly r = *this;
        const rational inv = rational(1) / leading();
        for (auto &c : r.m_coeffs) {
            c *= inv;
        }
        return r;
    }

    [[nodiscard]] std::string to_string(const std::string &var = "x") const
    {
        if (is_zero()) {
            return "0";
        }
        std::string s;
        for (int d = degree(); d >= 0; --d) {
            const auto &c = m_coeffs[static_cast<std::size_t>(d)];
            if (c.is_zero()) {
                continue;
            }
            if (!s.empty()) {
                s += " + ";
            }
            s += c.to_string();
            if (d >= 1) {
                s += "*" + var;
            }
            if (d >= 2) {
                s += "^" + std::to_string(d);
            }
        }
        return s;
    }

private:
    void trim()
    {
        while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
            m_coeffs.pop_back();
        }
    }

    std::vector<rational> m_coeffs;
};

// Monic gcd.
inline upoly gcd(upoly a, upoly b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Univariate rational function, reduced: gcd(num, den) = 1 and den monic.
class urat
{
public:
    urat() : m_den(1) {}
    urat(const upoly &p) : m_num(p), m_den(1) {}
    urat(upoly num, upoly den) : m_num(std::move(num)), m_den(std::move(den))
    {
        if (m_den.is_zero()) {
            throw std::domain_error("urat: zero denominator");
        }
        normalize();
    }

    [[nodiscard]] const upoly &num() const { return m_num; }
    [[nodiscard]] const upoly &den() const { return m_den; }

    friend urat operator+(const urat &a, const urat &b) { return {a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den}; }
    friend urat operator-(const urat &a, const urat &b) { return {a.m_num * b.m_den - b.m_num * a.m_den, a.m_den * b.m_den}; }
    friend urat operator*(const urat &a, const urat &b) { return {a.m_num * b.m_num, a.m_den * b.m_den}; }
    friend bool operator==(const urat &, const urat &) = default;

private:
    void normalize()
    {
        if (m_num.is_zero()) {
            m_den = upoly(1);
            return;
        }
        const upoly g = gcd(m_num, m_den);
        m_num = divmod(m_num, g).first;
        m_den = divmod(m_den, g).first;
        const rational lc = m_den.leading();
        if (lc != rational(1)) {
            const upoly inv(rational(1) / lc);
            m_num *= inv;
            m_den *= inv;
        }
    }

    upoly m_num;
    upoly m_den;
};

class ansatz_inconsistent : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// The two-product expression
//   prod_I (x+2+l)/(x+2-l) prod_J (x-l)/(x+l) + prod_I (x-l)/(x+l) prod_J (x+2+l)/(x+2-l)
inline urat twin_product_sum(const std::vector<int> &I, const std::vector<int> &J)
{
    auto ratio = [](int shift_num, int shift_den) {
        return urat(upoly::linear(rational(shift_num)), upoly::linear(rational(shift_den)));
    };
    urat first(upoly(1)), second(upoly(1));
    for (int l : I) {
        first = first * ratio(2 + l, 2 - l);
        second = second * ratio(-l, l);
    }
    for (int l : J) {
        first = first * ratio(-l, l);
        second = second * ratio(2 + l, 2 - l);
    }
    return first + second;
}

struct partial_fraction_result {
    // twin_product_sum - 2 = numerator / denominator, with
    // denominator = prod_{l in I} F_l prod_{l in J} F_l and F_l = (x+2-l)(x+l)
    upoly numerator;
    upoly denominator;
    std::map<int, rational> coefficients; // lambda -> b_lambda, lambda in I u J
    bool unique = true;                   // false when the linear system was rank deficient

    [[nodiscard]] urat excess() const { return {numerator, denominator}; }
};

namespace detail
{

inline upoly pole_pair(int l) { return upoly::linear(rational(2 - l)) * upoly::linear(rational(l)); }

} // namespace detail

// Solve twin_product_sum(I, J) - 2 = sum_{l in I u J} b_l / ((x+2-l)(x+l)) for the b_l
// by clearing denominators and equating coefficients. Throws ansatz_inconsistent
// when no choice of b_l reproduces the left side.
inline partial_fraction_result partial_fractions(const std::vector<int> &I, const std::vector<int> &J)
{
    partial_fraction_result out;
    // Over the common denominator every factor of the twin sum is polynomial:
    //   (x+2+l)/(x+2-l) = (x+2+l)(x+l) / F_l,  (x-l)/(x+l) = (x-l)(x+2-l) / F_l
    upoly first(1), second(1), D(1);
    for (int l : I) {
        first *= upoly::linear(rational(2 + l)) * upoly::linear(rational(l));
        second *= upoly::linear(rational(-l)) * upoly::linear(rational(2 - l));
        D *= detail::pole_pair(l);
    }
    for (int l : J) {
        first *= upoly::linear(rational(-l)) * upoly::linear(rational(2 - l));
        second *= upoly::linear(rational(2 + l)) * upoly::linear(rational(l));
        D *= detail::pole_pair(l);
    }
    const upoly target = first + second - D * upoly(2);
    out.numerator = target;
    out.denominator = D;

    std::set<int> lambdas(I.begin(), I.end());
    lambdas.insert(J.begin(), J.end());
    const std::vector<int> ls(lambdas.begin(), lambdas.end());
    std::vector<upoly> cols; // D / F_l
    for (int l : ls) {
        auto [q, r] = divmod(D, detail::pole_pair(l));
        cols.push_back(std::move(q));
    }
    const std::size_t nrows = static_cast<std::size_t>(std::max({D.degree() + 1, target.degree() + 1, 1}));
    const std::size_t ncols = cols.size();
    // augmented matrix, row r = coefficient of x^r
    std::vector<std::vector<rational>> a(nrows, std::vector<rational>(ncols + 1));
    for (std::size_t r = 0; r < nrows; ++r) {
        for (std::size_t c = 0; c < ncols; ++c) {
            a[r][c] = cols[c].coeff(r);
        }
        a[r][ncols] = target.coeff(r);
    }
    // reduced row echelon form
    std::vector<int> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < nrows; ++c) {
        std::size_t p = row;
        while (p < nrows && a[p][c].is_zero()) {
            ++p;
        }
        if (p == nrows) {
            continue;
        }
        std::swap(a[p], a[row]);
        const rational inv = rational(1) / a[row][c];
        for (auto &v : a[row]) {
            v *= inv;
        }
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r != row && !a[r][c].is_zero()) {
                const rational f = a[r][c];
                for (std::size_t k = c; k <= ncols; ++k) {
                    a[r][k] -= f * a[row][k];
                }
            }
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++row;
    }
    for (std::size_t r = row; r < nrows; ++r) {
        if (!a[r][ncols].is_zero()) {
            throw ansatz_inconsistent("partial fractions: linear system has no solution");
        }
    }
    out.unique = row == ncols;
    std::vector<rational> sol(ncols); // free variables stay 0
    for (std::size_t r = 0; r < row; ++r) {
        sol[static_cast<std::size_t>(pivot_col_of_row[r])] = a[r][ncols];
    }
    upoly recon;
    for (std::size_t c = 0; c < ncols; ++c) {
        out.coefficients[ls[c]] = sol[c];
        recon += cols[c] * upoly(sol[c]);
    }
    if (!(recon == target)) {
        throw ansatz_inconsistent("partial fractions: reconstruction differs from the expression");
    }
    return out;
}

} // namespace umemura

#endif
