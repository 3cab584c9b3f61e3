#pragma once

/**
 * @file sequences.hpp
 * @brief Bi-periodic Fibonacci and Lucas terms and their scalar identities.
 *
 * Index conventions used throughout the library:
 *
 *   q(0) = 0, q(1) = 1, q(n) = a·q(n−1) + q(n−2) for even n,
 *                       q(n) = b·q(n−1) + q(n−2) for odd n;
 *   l(0) = 2, l(1) = a, l(n) = b·l(n−1) + l(n−2) for even n,
 *                       l(n) = a·l(n−1) + l(n−2) for odd n;
 *   q(−n) = (−1)^(n+1)·q(n),  l(−n) = (−1)^n·l(n).
 *
 * The polynomial q(n)(x) multiplies by a·x at even n and b·x at odd n.
 * This is the only assignment under which the Q_q power closed form
 * holds (see audit's parity erratum), and it reduces to q(n) at x = 1.
 */

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "bpfib/poly.hpp"
#include "bpfib/rational.hpp"

namespace bpfib {

class ParamSet {
public:
    /// Throws InvalidParameter if a or b is zero.
    ParamSet(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    /// b/a.
    const Rational& ratio() const { return ratio_; }
    Rational ab_plus_4() const { return a_ * b_ + Rational{4}; }
    bool degenerate() const { return ab_plus_4().is_zero(); }

    /// Throws DegenerateParameter naming `what` when ab = −4.
    void require_nondegenerate(std::string_view what) const;

    std::string to_string() const;

    friend bool operator==(const ParamSet&, const ParamSet&) = default;

private:
    Rational a_;
    Rational b_;
    Rational ratio_;
};

/// Parity of |n|: 0 or 1.
int parity_eps(std::int64_t n);

/// floor(n/2), rounding toward −∞.
std::int64_t floor_half(std::int64_t n);

Rational bp_fib(std::int64_t n, const ParamSet& p);
Rational bp_lucas(std::int64_t n, const ParamSet& p);

/// q(0..count−1) in one pass.
std::vector<Rational> bp_fib_terms(std::size_t count, const ParamSet& p);
std::vector<Rational> bp_lucas_terms(std::size_t count, const ParamSet& p);

/// q(n)(x) for n ≥ 0; throws ContractViolation for negative n.
Poly bp_fib_poly(std::int64_t n, const ParamSet& p);

/// q(n)(x0) without building the polynomial; negative n via the sign rule.
Rational bp_fib_at(std::int64_t n, const ParamSet& p, const Rational& x0);

/// ((ab+4)q(n) − (l(n+1)+l(n−1)), l(n) − (q(n+1)+q(n−1))); both zero.
std::pair<Rational, Rational> bridge_residuals(std::int64_t n, const ParamSet& p);

/// a^(1−ε)b^ε·q(n+1)q(n−1) − a^ε b^(1−ε)·q(n)²; equals a(−1)^n.
Rational cassini_q(std::int64_t n, const ParamSet& p);

/// (b/a)^(1−ε)·l(n+1)l(n−1) − (b/a)^ε·l(n)²; equals (ab+4)(−1)^(n+1).
/// Throws DegenerateParameter when ab = −4.
Rational cassini_l(std::int64_t n, const ParamSet& p);

// Which pair of shifted terms an addition/subtraction formula expands into.
//   upper: q(m+1), q(m) against q(n), q(n∓1)
//   lower: q(m), q(m−1) against q(n±1), q(n)
enum class Expansion { upper, lower };

/// q(m+n) from terms of index ≤ max(m, n) + 1. Requires m, n ≥ 1.
Rational fib_add(std::int64_t m, std::int64_t n, const ParamSet& p, Expansion form = Expansion::upper);

/// q(m−n) from the product formulas. Requires m ≥ n ≥ 0.
Rational fib_sub(std::int64_t m, std::int64_t n, const ParamSet& p, Expansion form = Expansion::upper);

} // namespace bpfib
