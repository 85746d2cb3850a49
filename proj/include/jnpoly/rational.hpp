#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "jnpoly/errors.hpp"

namespace jnpoly {

using int128 = __int128;

namespace detail {

inline int128 abs128(int128 x) { return x < 0 ? -x : x; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational addition overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("rational subtraction overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational multiplication overflow");
    return r;
}

inline std::string int128_to_string(int128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1
                              : static_cast<unsigned __int128>(x);
    char buf[48];
    int pos = 48;
    while (u != 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string out;
    if (neg) out.push_back('-');
    out.append(buf + pos, buf + 48);
    return out;
}

}  // namespace detail

/// Exact rational scalar. Always stored normalized: den > 0, gcd(|num|, den) = 1.
/// Arithmetic is overflow-checked 128-bit; leaving the range throws OverflowError
/// rather than wrapping, so exact zero tests stay sound.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rational from_int128(int128 n, int128 d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    /// Parses "p", "-p" or "p/q" with q > 0.
    static Rational from_string(std::string_view s);

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const { return from_raw(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return from_raw(detail::checked_add(a.num_, b.num_), 1);
        int128 g = detail::gcd128(a.den_, b.den_);
        int128 bd = b.den_ / g;
        int128 n = detail::checked_add(detail::checked_mul(a.num_, bd),
                                       detail::checked_mul(b.num_, a.den_ / g));
        int128 d = detail::checked_mul(a.den_, bd);
        return from_int128(n, d);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return from_raw(detail::checked_sub(a.num_, b.num_), 1);
        int128 g = detail::gcd128(a.den_, b.den_);
        int128 bd = b.den_ / g;
        int128 n = detail::checked_sub(detail::checked_mul(a.num_, bd),
                                       detail::checked_mul(b.num_, a.den_ / g));
        int128 d = detail::checked_mul(a.den_, bd);
        return from_int128(n, d);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return from_raw(detail::checked_mul(a.num_, b.num_), 1);
        // Cross-reduce before multiplying to keep intermediates small.
        int128 g1 = detail::gcd128(a.num_, b.den_);
        int128 g2 = detail::gcd128(b.num_, a.den_);
        return from_raw(detail::checked_mul(a.num_ / g1, b.num_ / g2),
                        detail::checked_mul(a.den_ / g2, b.den_ / g1));
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InputError("rational division by zero");
        int128 g1 = detail::gcd128(a.num_, b.num_);
        int128 g2 = detail::gcd128(b.den_, a.den_);
        int128 n = detail::checked_mul(a.num_ / g1, b.den_ / g2);
        int128 d = detail::checked_mul(a.den_ / g2, b.num_ / g1);
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return from_raw(n, d);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::checked_mul(a.num_, b.den_) < detail::checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) /
                                   static_cast<long double>(den_));
    }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const {
        std::string s = detail::int128_to_string(num_);
        if (den_ != 1) {
            s.push_back('/');
            s += detail::int128_to_string(den_);
        }
        return s;
    }

private:
    static Rational from_raw(int128 n, int128 d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    void normalize() {
        if (den_ == 0) throw InputError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        int128 g = detail::gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    int128 num_;
    int128 den_;
};

inline Rational Rational::from_string(std::string_view s) {
    auto fail = [&] { throw InputError("malformed rational '" + std::string(s) + "'"); };
    size_t i = 0;
    auto read_int = [&](bool allow_sign) -> int128 {
        bool neg = false;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size() || s[i] < '0' || s[i] > '9') fail();
        int128 v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            v = detail::checked_add(detail::checked_mul(v, 10), s[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    };
    int128 n = read_int(true);
    int128 d = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        d = read_int(false);
        if (d == 0) fail();
    }
    if (i != s.size()) fail();
    return from_int128(n, d);
}

inline Rational half(const Rational& x) { return x / Rational(2); }
inline double half(double x) { return x / 2.0; }

}  // namespace jnpoly
