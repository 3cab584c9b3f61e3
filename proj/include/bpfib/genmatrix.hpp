#pragma once

/**
 * @file genmatrix.hpp
 * @brief Generating matrices Q_q and Q_l, their closed-form powers, and
 *        the Hadamard products Q^n ∘ Q^(−n).
 *
 *   Q_q = [[b·x, b/a], [1, 0]]
 *   Q_l = [[a² + 2a/b, a²/b], [a, 2a/b]]
 *
 * Sylvester's Fibonacci matrix [[1,1],[1,0]] is Q_q at a = b = 1, x = 1.
 */

#include <cstdint>

#include "bpfib/mat2.hpp"
#include "bpfib/poly.hpp"
#include "bpfib/rational.hpp"
#include "bpfib/sequences.hpp"

namespace bpfib {

enum class Family { q, l };

Mat2<Rational> mat_qq(const ParamSet& p, const Rational& x);
/// Q_q with x kept as the indeterminate.
Mat2<Poly> mat_qq_symbolic(const ParamSet& p);
Mat2<Rational> mat_ql(const ParamSet& p);

/**
 * Q_q^n from sequence terms instead of repeated products.
 *
 * n ≥ 0: (b/a)^⌊n/2⌋ · [[(b/a)^ε q(n+1), (b/a) q(n)], [q(n), (b/a)^ε q(n−1)]]
 *        with ε the parity of n.
 * n < 0, m = −n even: (b/a)^(−m/2)     · [[q(m−1), −(b/a) q(m)], [−q(m), q(m+1)]]
 * n < 0, m = −n odd:  (b/a)^(−(m+1)/2) · [[−(b/a) q(m−1), (b/a) q(m)], [q(m), −(b/a) q(m+1)]]
 */
Mat2<Rational> qq_pow_closed(std::int64_t n, const ParamSet& p, const Rational& x);
Mat2<Poly> qq_pow_closed_symbolic(std::int64_t n, const ParamSet& p);

/**
 * Q_l^n for n ≥ 0:
 *   even n: (a/b)^n (ab+4)^(n/2)     · [[q(n+1), q(n)], [(b/a) q(n), q(n−1)]]
 *   odd n:  (a/b)^n (ab+4)^((n−1)/2) · [[l(n+1), l(n)], [(b/a) l(n), l(n−1)]]
 */
Mat2<Rational> ql_pow_closed(std::int64_t n, const ParamSet& p);

/// M^n ∘ M^(−n) computed entrywise from the two powers.
Mat2<Rational> hadamard_direct(const Mat2<Rational>& m, std::int64_t n);

/// (−1)^n (a/b)^n · (Q_q^n ∘ adj Q_q^n) at x = 1. Equals
/// hadamard_direct(Q_q, n) for every n ≥ 0.
Mat2<Rational> hadamard_q(std::int64_t n, const ParamSet& p);

/**
 * (−1)^n (b²/(a²(ab+4)))^n · (Q_l^n ∘ adj Q_l^n), the scaled-adjugate
 * form with the alternating sign as it is usually printed.
 *
 * det(Q_l^n) carries no alternating sign, so this equals
 * hadamard_direct(Q_l, n) only for even n and its negative for odd n.
 * Throws DegenerateParameter when ab = −4.
 */
Mat2<Rational> hadamard_l(std::int64_t n, const ParamSet& p);

/// Q^n minus its three-term matrix recurrence at x = 1; always zero.
///   q: Q^n − (b Q^(n−1) + (b/a) Q^(n−2))
///   l: Q^n − (b/(a(ab+4)) Q^(n+1) + (a/b) Q^(n−1))
Mat2<Rational> matrix_recurrence_residual(Family which, std::int64_t n, const ParamSet& p);

} // namespace bpfib
