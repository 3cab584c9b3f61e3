#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bpfib/rational.hpp"

namespace bpfib {

/// Dense univariate polynomial over the rationals, coefficients in
/// ascending degree. Trailing zeros are trimmed; zero is the empty list.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);
    Poly(Rational constant);

    /// The indeterminate x.
    static Poly x();
    static Poly monomial(Rational coefficient, std::size_t degree);

    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Zero past the degree.
    Rational coefficient(std::size_t i) const;

    /// Horner evaluation.
    Rational eval(const Rational& x0) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
    Poly operator-() const;

    friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

    /// JSON array of Rational strings, ascending degree: ["1","0","6"].
    std::string to_json_text() const;
    static Poly parse_json_text(std::string_view text);

    /// Human form, descending degree: "12x^3 + 4x".
    std::string to_pretty() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();

    std::vector<Rational> coeffs_;
};

inline Poly zero_like(const Poly&) { return Poly{}; }
inline Poly one_like(const Poly&) { return Poly{Rational{1}}; }
inline bool is_zero(const Poly& p) { return p.is_zero(); }
/// Only nonzero constants are units.
Poly inverse(const Poly& p);

inline Rational poly_eval(const Poly& p, const Rational& x0) { return p.eval(x0); }

} // namespace bpfib
