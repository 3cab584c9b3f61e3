#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision exact fractions.
 *
 * Canonical form is kept after every operation: gcd(|num|, den) = 1,
 * den > 0, and zero is 0/1. Text form is "-21/2", or "7" when the
 * denominator is one.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bpfib {

class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    Rational(std::int64_t numerator, std::int64_t denominator);
    Rational(mpz_class numerator, mpz_class denominator);
    explicit Rational(mpz_class integer);

    /// Parses "[-]digits[/digits]". Throws ParseError on anything else,
    /// including a zero denominator.
    static Rational parse(std::string_view text);

    std::string to_string() const;

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    double to_double() const { return value_.get_d(); }

    /// Throws DivisionByZero for zero.
    Rational reciprocal() const;

    /// Integer power; negative exponents go through reciprocal().
    Rational pow(std::int64_t exponent) const;

    Rational abs() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

// Scalar-ring hooks used by Mat2.
inline Rational zero_like(const Rational&) { return Rational{}; }
inline Rational one_like(const Rational&) { return Rational{1}; }
inline bool is_zero(const Rational& r) { return r.is_zero(); }
Rational inverse(const Rational& r);

/// Square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

} // namespace bpfib
