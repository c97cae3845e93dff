#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace nolat {

using Integer = mpz_class;

/// Exact fraction with arbitrary-precision numerator and a positive,
/// coprime denominator. Serialized as "p/q", or "p" when q = 1.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    template <std::integral T, std::integral U>
    Rational(T num, U den) {
        if (den == 0) throw_zero_denominator();
        value_ = mpq_class(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
        value_.canonicalize();
    }

    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    /// Accepts "p", "p/q", optional leading '-' (ASCII or U+2212) or '+'.
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    std::string str() const;
    double to_double() const { return value_.get_d(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    [[noreturn]] static void throw_zero_denominator();

    mpq_class value_{0};
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

/// Integer power with non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

/// Largest integer <= q (and smallest >= q).
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Largest t >= 0 with t^2 <= q. Throws NegativeInput for q < 0.
Integer int_sqrt_floor(const Rational& q);

/// Exact square root when q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational best_approximation(double x, long max_den);

}  // namespace nolat
