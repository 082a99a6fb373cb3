#ifndef UMEMURA_COMBINAT_HPP
#define UMEMURA_COMBINAT_HPP

#include <umemura/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace umemura
{

// [n;m] = {1, ..., n, n+2, n+4, ..., n+2m}
class ground_set
{
public:
    ground_set() = default;
    ground_set(int n, int m) : m_n(n), m_m(m)
    {
        if (n < 0 || m < 0) {
            throw std::invalid_argument("ground_set: n and m must be nonnegative");
        }
        if (n + m > 62) {
            throw std::invalid_argument("ground_set: too many elements for a bitmask");
        }
        for (int i = 1; i <= n; ++i) {
            m_elements.push_back(i);
        }
        for (int j = 1; j <= m; ++j) {
            m_elements.push_back(n + 2 * j);
        }
    }

    [[nodiscard]] int n() const { return m_n; }
    [[nodiscard]] int m() const { return m_m; }
    [[nodiscard]] const std::vector<int> &elements() const { return m_elements; }
    [[nodiscard]] std::size_t size() const { return m_elements.size(); }
    [[nodiscard]] std::uint64_t full_mask() const { return (std::uint64_t{1} << m_elements.size()) - 1; }

    [[nodiscard]] bool contains(int x) const { return std::binary_search(m_elements.begin(), m_elements.end(), x); }

    // Bit position of x, or -1.
    [[nodiscard]] int index_of(int x) const
    {
        auto it = std::lower_bound(m_elements.begin(), m_elements.end(), x);
        return (it != m_elements.end() && *it == x) ? static_cast<int>(it - m_elements.begin()) : -1;
    }

private:
    int m_n = 0;
    int m_m = 0;
    std::vector<int> m_elements;
};

// A subset of a ground set, stored as a bitmask over its sorted elements.
class index_subset
{
public:
    index_subset(const ground_set &g, std::uint64_t mask) : m_ground(&g), m_mask(mask & g.full_mask()) {}

    static index_subset from_members(const ground_set &g, std::span<const int> members)
    {
        std::uint64_t mask = 0;
        for (int x : members) {
            int i = g.index_of(x);
            if (i < 0) {
                throw std::invalid_argument("index_subset: " + std::to_string(x) + " is not in the ground set");
            }
            mask |= std::uint64_t{1} << i;
        }
        return {g, mask};
    }

    [[nodiscard]] const ground_set &ground() const { return *m_ground; }
    [[nodiscard]] std::uint64_t mask() const { return m_mask; }

    [[nodiscard]] std::vector<int> members() const
    {
        std::vector<int> out;
        const auto &el = m_ground->elements();
        for (std::size_t i = 0; i < el.size(); ++i) {
            if ((m_mask >> i) & 1u) {
                out.push_back(el[i]);
            }
        }
        return out;
    }

    [[nodiscard]] index_subset complement() const { return {*m_ground, ~m_mask & m_ground->full_mask()}; }

private:
    const ground_set *m_ground;
    std::uint64_t m_mask;
};

// |S| in the element-sum sense.
inline long weight(std::span<const int> s) { return std::accumulate(s.begin(), s.end(), 0L); }

class non_integer_coefficient : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// d_{n,m}(I) = prod_{i in I, j not in I} |(i+j)/(i-j)|; integral for every I.
inline big_int dcoef(const index_subset &s)
{
    rational r(1);
    const auto in = s.members();
    const auto out = s.complement().members();
    for (int i : in) {
        for (int j : out) {
            r *= rational(std::abs(i + j), std::abs(i - j));
        }
    }
    if (!r.is_integer() || r.sign() <= 0) {
        std::string w;
        for (int i : in) {
            w += (w.empty() ? "" : ",") + std::to_string(i);
        }
        throw non_integer_coefficient("dcoef is not a positive integer for I={" + w + "}: " + r.to_string());
    }
    return r.num();
}

// c(I) = sum over members above n of (i - n)/2.
inline long csign_exponent(const index_subset &s)
{
    const int n = s.ground().n();
    long c = 0;
    for (int i : s.members()) {
        if (i > n) {
            c += (i - n) / 2;
        }
    }
    return c;
}

// Weakly decreasing parts, no trailing zeros.
class partition
{
public:
    partition() = default;
    explicit partition(std::vector<int> parts) : m_parts(std::move(parts))
    {
        if (std::any_of(m_parts.begin(), m_parts.end(), [](int p) { return p < 0; })) {
            throw std::invalid_argument("partition: negative part");
        }
        if (!std::is_sorted(m_parts.begin(), m_parts.end(), std::greater<>())) {
            throw std::invalid_argument("partition: parts must be weakly decreasing");
        }
        while (!m_parts.empty() && m_parts.back() == 0) {
            m_parts.pop_back();
        }
    }

    [[nodiscard]] const std::vector<int> &parts() const { return m_parts; }
    [[nodiscard]] std::size_t length() const { return m_parts.size(); }
    [[nodiscard]] int size() const { return std::accumulate(m_parts.begin(), m_parts.end(), 0); }
    [[nodiscard]] int part(std::size_t i) const { return i < m_parts.size() ? m_parts[i] : 0; }

    [[nodiscard]] partition conjugate() const
    {
        std::vector<int> c;
        if (!m_parts.empty()) {
            for (int j = 1; j <= m_parts.front(); ++j) {
                c.push_back(static_cast<int>(std::count_if(m_parts.begin(), m_parts.end(), [j](int p) { return p >= j; })));
            }
        }
        return partition(std::move(c));
    }

    friend bool operator==(const partition &, const partition &) = default;

private:
    std::vector<int> m_parts;
};

class invalid_symbol : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// (a_1 > ... > a_p | b_1 > ... > b_p)
struct frobenius_symbol {
    std::vector<int> arms;
    std::vector<int> legs;
    friend bool operator==(const frobenius_symbol &, const frobenius_symbol &) = default;
};

inline partition frobenius_to_partition(const frobenius_symbol &f)
{
    const std::size_t p = f.arms.size();
    if (f.legs.size() != p) {
        throw invalid_symbol("frobenius symbol: arms and legs differ in length");
    }
    auto strictly_decreasing_nonneg = [](const std::vector<int> &v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0 || (i > 0 && v[i] >= v[i - 1])) {
                return false;
            }
        }
        return true;
    };
    if (!strictly_decreasing_nonneg(f.arms) || !strictly_decreasing_nonneg(f.legs)) {
        throw invalid_symbol("frobenius symbol: arms and legs must be strictly decreasing and nonnegative");
    }
    if (p == 0) {
        return {};
    }
    // rows i <= p: lambda_i = a_i + i; columns j <= p: lambda'_j = b_j + j.
    // Rows below the diagonal square are read off the column lengths.
    const int nrows = std::max(static_cast<int>(p), f.legs[0] + 1);
    std::vector<int> rows(static_cast<std::size_t>(nrows), 0);
    for (std::size_t i = 0; i < p; ++i) {
        rows[i] = f.arms[i] + static_cast<int>(i) + 1;
    }
    for (int r = static_cast<int>(p); r < nrows; ++r) {
        int len = 0;
        for (std::size_t j = 0; j < p; ++j) {
            if (f.legs[j] + static_cast<int>(j) + 1 > r) {
                ++len;
            }
        }
        rows[static_cast<std::size_t>(r)] = len;
    }
    if (!std::is_sorted(rows.begin(), rows.end(), std::greater<>())) {
        throw invalid_symbol("frobenius symbol: not the symbol of a Young diagram");
    }
    partition lam(rows);
    // the diagonal length and the hooks must reproduce the symbol
    const auto conj = lam.conjugate();
    for (std::size_t j = 0; j < p; ++j) {
        if (conj.part(j) != f.legs[j] + static_cast<int>(j) + 1) {
            throw invalid_symbol("frobenius symbol: legs inconsistent with arms");
        }
    }
    if (lam.part(p) > static_cast<int>(p)) {
        throw invalid_symbol("frobenius symbol: diagonal longer than the symbol");
    }
    return lam;
}

inline frobenius_symbol partition_to_frobenius(const partition &lam)
{
    frobenius_symbol f;
    const auto conj = lam.conjugate();
    for (std::size_t i = 0; i < lam.length(); ++i) {
        const int row = lam.part(i);
        if (row <= static_cast<int>(i)) {
            break;
        }
        f.arms.push_back(row - static_cast<int>(i) - 1);
        f.legs.push_back(conj.part(i) - static_cast<int>(i) - 1);
    }
    return f;
}

// lambda(I) = (i_1, ..., i_p | i_1 - 1, ..., i_p - 1) for I = {i_1 > ... > i_p}.
inline partition lambda_of_subset(std::vector<int> subset, int n)
{
    std::sort(subset.begin(), subset.end(), std::greater<>());
    frobenius_symbol f;
    for (int i : subset) {
        if (i < 1 || i > n - 1) {
            throw std::invalid_argument("lambda_of_subset: element outside [n-1]");
        }
        f.arms.push_back(i);
        f.legs.push_back(i - 1);
    }
    return frobenius_to_partition(f);
}

class too_many_parts : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Weyl dimension formula for the GL(n) irreducible with highest weight lambda.
inline big_int gl_dim(int n, const partition &lam)
{
    if (n < 0 || static_cast<int>(lam.length()) > n) {
        throw too_many_parts("gl_dim: partition has more than n parts");
    }
    rational r(1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            r *= rational(lam.part(static_cast<std::size_t>(i)) - lam.part(static_cast<std::size_t>(j)) + j - i, j - i);
        }
    }
    if (!r.is_integer() || r.sign() <= 0) {
        throw std::logic_error("gl_dim: Weyl product is not a positive integer");
    }
    return r.num();
}

} // namespace umemura

#endif
