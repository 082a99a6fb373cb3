#ifndef UMEMURA_RATIONAL_HPP
#define UMEMURA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace umemura
{

using big_int = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq.
class rational
{
public:
    rational() = default;
    rational(int v) : m_value(v) {}
    rational(long v) : m_value(v) {}
    rational(long long v) : m_value(big_int(std::to_string(v))) {}
    rational(const big_int &v) : m_value(v) {}
    rational(const big_int &num, const big_int &den)
    {
        if (den == 0) {
            throw std::domain_error("rational: zero denominator");
        }
        m_value = mpq_class(num, den);
        m_value.canonicalize();
    }
    rational(long long num, long long den) : rational(big_int(std::to_string(num)), big_int(std::to_string(den))) {}
    explicit rational(const mpq_class &v) : m_value(v)
    {
        m_value.canonicalize();
    }

    // Accepts "p" or "p/q" with optional leading sign.
    static rational parse(std::string_view text)
    {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                return rational(big_int(s));
            }
            return rational(big_int(s.substr(0, slash)), big_int(s.substr(slash + 1)));
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument("rational: cannot parse '" + s + "'");
        }
    }

    [[nodiscard]] big_int num() const { return m_value.get_num(); }
    [[nodiscard]] big_int den() const { return m_value.get_den(); }
    [[nodiscard]] const mpq_class &get() const { return m_value; }

    [[nodiscard]] bool is_zero() const { return sgn(m_value) == 0; }
    [[nodiscard]] bool is_integer() const { return m_value.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(m_value); }

    [[nodiscard]] double to_double() const { return m_value.get_d(); }
    [[nodiscard]] long double to_long_double() const
    {
        // mpq has no long double accessor; split to keep the extra bits for
        // moderately sized values.
        const big_int &n = m_value.get_num();
        const big_int &d = m_value.get_den();
        return to_ld(n) / to_ld(d);
    }

    [[nodiscard]] std::string to_string() const
    {
        if (is_integer()) {
            return m_value.get_num().get_str();
        }
        return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
    }

    rational &operator+=(const rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    rational &operator-=(const rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    rational &operator*=(const rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    rational &operator/=(const rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("rational: division by zero");
        }
        m_value /= o.m_value;
        return *this;
    }

    friend rational operator+(rational a, const rational &b) { return a += b; }
    friend rational operator-(rational a, const rational &b) { return a -= b; }
    friend rational operator*(rational a, const rational &b) { return a *= b; }
    friend rational operator/(rational a, const rational &b) { return a /= b; }
    friend rational operator-(const rational &a)
    {
        rational r;
        r.m_value = -a.m_value;
        return r;
    }

    friend bool operator==(const rational &a, const rational &b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const rational &a, const rational &b)
    {
        int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const rational &r) { return os << r.to_string(); }

private:
    static long double to_ld(const big_int &v)
    {
        // 2^62 chunks are exact in long double's 64-bit mantissa
        if (v.fits_slong_p()) {
            return static_cast<long double>(v.get_si());
        }
        long double r = 0;
        big_int x = abs(v);
        long double scale = 1;
        const big_int chunk = big_int(1) << 62;
        while (x != 0) {
            big_int part = x % chunk;
            r += static_cast<long double>(part.get_ui()) * scale;
            scale *= 4611686018427387904.0L;
            x /= chunk;
        }
        return sgn(v) < 0 ? -r : r;
    }

    mpq_class m_value{0};
};

inline rational abs(const rational &r) { return r.sign() < 0 ? -r : r; }

inline rational pow(const rational &base, unsigned e)
{
    rational r(1);
    for (unsigned i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

inline big_int factorial_odd(int n)
{
    // (2n+1)!! = 1*3*5*...*(2n+1); (-1)!! = 1
    big_int r = 1;
    for (int i = 1; i <= 2 * n + 1; i += 2) {
        r *= i;
    }
    return r;
}

inline big_int binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    big_int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace umemura

#endif
