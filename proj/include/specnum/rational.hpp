#pragma once

// Exact scalars: arbitrary-precision integers and reduced rationals.
//
// Both are thin value wrappers around GMP. A Rational is always stored in
// canonical form (positive denominator, gcd 1), so operator== is plain
// structural equality.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specnum {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T v) {  // NOLINT: implicit from integers is intended
        if constexpr (std::is_signed_v<T>)
            q_ = static_cast<long>(v);
        else
            q_ = static_cast<unsigned long>(v);
    }
    Rational(const BigInt& v) : q_(v) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "a", "a/b" or "-a/b" (whitespace not allowed).
    static Rational parse(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("Rational: empty string");
        const auto slash = text.find('/');
        auto parse_int = [](std::string_view s) {
            if (s.empty()) throw std::invalid_argument("Rational: malformed integer");
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size()) throw std::invalid_argument("Rational: malformed integer");
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9')
                    throw std::invalid_argument("Rational: malformed integer '" + std::string(s) + "'");
            std::string owned(s[0] == '+' ? s.substr(1) : s);
            return BigInt(owned, 10);
        };
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Canonical "num/den"; zero is "0/1".
    std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    Rational operator-() const { return from_mpq(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    const mpq_class& raw() const { return q_; }

private:
    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }
    mpq_class q_{0};
};

/// base^e; base must be nonzero when e < 0.
inline Rational pow(const Rational& base, long e) {
    if (e < 0) return Rational(1) / pow(base, -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

inline BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// n! / prod(parts_i!); parts must sum to n.
inline BigInt multinomial(long n, std::span<const long> parts) {
    if (n < 0) throw std::invalid_argument("multinomial: negative n");
    long total = 0;
    for (long k : parts) {
        if (k < 0) throw std::invalid_argument("multinomial: negative part");
        total += k;
    }
    if (total != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    BigInt r = 1;
    long left = n;
    for (long k : parts) {
        r *= binomial(left, k);
        left -= k;
    }
    return r;
}

inline BigInt multinomial(long n, std::initializer_list<long> parts) {
    return multinomial(n, std::span<const long>(parts.begin(), parts.size()));
}

}  // namespace specnum
