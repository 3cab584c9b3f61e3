#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "bpfib/rational.hpp"

namespace bpfib {

/**
 * u + v·√D over the rationals with a fixed radicand D.
 *
 * √D stays formal even when D is a perfect square, so (0 + 1√4) is not
 * folded into 2. Arithmetic between elements with different radicands
 * throws ContractViolation.
 */
class QuadExt {
public:
    QuadExt(Rational rational_part, Rational radical_part, Rational radicand);

    /// r + 0·√D.
    static QuadExt embed(Rational r, Rational radicand);

    const Rational& rational_part() const { return u_; }
    const Rational& radical_part() const { return v_; }
    const Rational& radicand() const { return d_; }

    /// u² − v²D.
    Rational norm() const;
    QuadExt conjugate() const;
    bool is_rational() const { return v_.is_zero(); }

    /// (u − v√D)/(u² − v²D); throws DivisionByZero on zero norm.
    QuadExt inverse() const;

    QuadExt pow(std::int64_t exponent) const;

    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);
    QuadExt& operator/=(const QuadExt& rhs);
    QuadExt& operator*=(const Rational& rhs);

    friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
    friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
    friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
    friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }
    friend QuadExt operator*(QuadExt lhs, const Rational& rhs) { return lhs *= rhs; }
    friend QuadExt operator*(const Rational& lhs, QuadExt rhs) { return rhs *= lhs; }
    QuadExt operator-() const;

    friend bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
        return lhs.d_ == rhs.d_ && lhs.u_ == rhs.u_ && lhs.v_ == rhs.v_;
    }

    /// "3 + 1/2√60", "-1/2 - 1/12√60", "6 + 0√60".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadExt& z);

private:
    void require_same_radicand(const QuadExt& rhs, const char* op) const;

    Rational u_;
    Rational v_;
    Rational d_;
};

inline QuadExt zero_like(const QuadExt& z) { return QuadExt::embed(Rational{}, z.radicand()); }
inline QuadExt one_like(const QuadExt& z) { return QuadExt::embed(Rational{1}, z.radicand()); }
inline bool is_zero(const QuadExt& z) { return z.rational_part().is_zero() && z.radical_part().is_zero(); }
QuadExt inverse(const QuadExt& z);

} // namespace bpfib
