// Exact rational arithmetic on 64-bit numerator/denominator pairs.
//
// Values are kept normalized (gcd(num, den) == 1, den > 0). Intermediate
// products are formed in 128 bits; a result that does not fit back into
// 64 bits raises std::overflow_error instead of silently wrapping.

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ethdinner {

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }
    constexpr bool is_integer() const { return den_ == 1; }

    /// Parses "7", "-3/4", "0.125", "1.5e-2". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// "p" or "p/q".
    std::string to_string() const;

    /// Shortest exact decimal ("0.1") when the denominator is 2^i 5^j,
    /// otherwise "p/q". Parses back to the same value.
    std::string to_exact_text() const;

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const {
        if (num_ == INT64_MIN) throw std::overflow_error("rational overflow in negation");
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        if (x.den_ == 1 && y.den_ == 1) {
            std::int64_t s;
            if (__builtin_add_overflow(x.num_, y.num_, &s))
                throw std::overflow_error("rational overflow in addition");
            return Rational(s);
        }
        if (x.den_ == y.den_) {
            return from_wide(static_cast<__int128>(x.num_) + y.num_, x.den_);
        }
        __int128 n = static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_;
        __int128 d = static_cast<__int128>(x.den_) * y.den_;
        return from_wide(n, d);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        if (x.den_ == 1 && y.den_ == 1) {
            std::int64_t s;
            if (__builtin_sub_overflow(x.num_, y.num_, &s))
                throw std::overflow_error("rational overflow in subtraction");
            return Rational(s);
        }
        __int128 n = static_cast<__int128>(x.num_) * y.den_ - static_cast<__int128>(y.num_) * x.den_;
        __int128 d = static_cast<__int128>(x.den_) * y.den_;
        return from_wide(n, d);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return from_wide(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend constexpr bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        if (x.den_ == y.den_) return x.num_ <=> y.num_;
        __int128 l = static_cast<__int128>(x.num_) * y.den_;
        __int128 r = static_cast<__int128>(y.num_) * x.den_;
        return l < r ? std::strong_ordering::less
                     : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        *this = from_wide(n, d);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_wide(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return Rational(0);
        __int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow: result does not fit in 64 bits");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace ethdinner
