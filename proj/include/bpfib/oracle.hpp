#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference values used by the audit and the tests.
 *
 * Nothing here calls into sequences/genmatrix/spectral: terms come from
 * stepping the raw recurrence (backwards for negative indices) and matrix
 * powers from one multiplication per step.
 */

#include <cstdint>

#include "bpfib/mat2.hpp"
#include "bpfib/poly.hpp"
#include "bpfib/rational.hpp"

namespace bpfib::oracle {

Rational naive_fib(std::int64_t n, const Rational& a, const Rational& b);
Rational naive_lucas(std::int64_t n, const Rational& a, const Rational& b);
/// q(n)(x0) by the polynomial recurrence with numbers plugged in.
Rational naive_fib_at(std::int64_t n, const Rational& a, const Rational& b, const Rational& x0);
/// q(n)(x) with even steps multiplying by a·x and odd steps by b·x. With
/// `swap_parity` the roles are exchanged (odd → a·x, even → b·x).
Poly naive_fib_poly(std::int64_t n, const Rational& a, const Rational& b, bool swap_parity = false);

/// q(n) mod `modulus` in O(n) word operations. a and b must have
/// denominators invertible mod `modulus` (Error otherwise).
std::uint64_t naive_fib_mod(std::uint64_t n, const Rational& a, const Rational& b, std::uint64_t modulus);

/// r mod `modulus` as an element of Z/mZ.
std::uint64_t reduce_mod(const Rational& r, std::uint64_t modulus);

/// m^n by |n| successive products (with the inverse for negative n).
template <ScalarRing T>
Mat2<T> repeated_power(const Mat2<T>& m, std::int64_t n) {
    Mat2<T> step = n < 0 ? mat_inverse(m) : m;
    Mat2<T> out = identity_like(m);
    for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) out = out * step;
    return out;
}

} // namespace bpfib::oracle
