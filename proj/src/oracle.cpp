#include "bpfib/oracle.hpp"

#include <string>

#include "bpfib/errors.hpp"

namespace bpfib::oracle {

namespace {

// Steps q(k) = c(k)·q(k−1) + q(k−2) forward, or q(k−2) = q(k) − c(k)·q(k−1)
// backward, from the pair (v0, v1) at indices (0, 1).
template <class T, class Coeff>
T walk(std::int64_t n, T v0, T v1, Coeff coeff) {
    if (n == 0) return v0;
    if (n == 1) return v1;
    if (n > 1) {
        for (std::int64_t k = 2; k <= n; ++k) {
            T next = coeff(k) * v1 + v0;
            v0 = std::move(v1);
            v1 = std::move(next);
        }
        return v1;
    }
    // (lo, hi) = (v(k−1), v(k)), walking k down from 1.
    T hi = std::move(v1), lo = std::move(v0);
    for (std::int64_t k = 1; k > n + 1; --k) {
        T below = hi - coeff(k) * lo;
        hi = std::move(lo);
        lo = std::move(below);
    }
    return lo;
}

} // namespace

Rational naive_fib(std::int64_t n, const Rational& a, const Rational& b) {
    return walk<Rational>(n, Rational{0}, Rational{1}, [&](std::int64_t k) { return k % 2 == 0 ? a : b; });
}

Rational naive_lucas(std::int64_t n, const Rational& a, const Rational& b) {
    return walk<Rational>(n, Rational{2}, a, [&](std::int64_t k) { return k % 2 == 0 ? b : a; });
}

Rational naive_fib_at(std::int64_t n, const Rational& a, const Rational& b, const Rational& x0) {
    Rational ax = a * x0, bx = b * x0;
    return walk<Rational>(n, Rational{0}, Rational{1}, [&](std::int64_t k) { return k % 2 == 0 ? ax : bx; });
}

Poly naive_fib_poly(std::int64_t n, const Rational& a, const Rational& b, bool swap_parity) {
    Poly ax = Poly::monomial(a, 1), bx = Poly::monomial(b, 1);
    if (swap_parity) std::swap(ax, bx);
    return walk<Poly>(n, Poly{}, Poly{Rational{1}}, [&](std::int64_t k) { return k % 2 == 0 ? ax : bx; });
}

std::uint64_t reduce_mod(const Rational& r, std::uint64_t modulus) {
    if (modulus < 2) throw ContractViolation("modulus must be at least 2");
    mpz_class m(std::to_string(modulus), 10);
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), r.denominator().get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("denominator of " + r.to_string() + " is not invertible mod " + std::to_string(modulus));
    mpz_class out = r.numerator() * den_inv;
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), m.get_mpz_t());
    return std::stoull(out.get_str());
}

std::uint64_t naive_fib_mod(std::uint64_t n, const Rational& a, const Rational& b, std::uint64_t modulus) {
    const unsigned __int128 m = modulus;
    const std::uint64_t am = reduce_mod(a, modulus), bm = reduce_mod(b, modulus);
    if (n == 0) return 0;
    std::uint64_t v0 = 0, v1 = 1 % modulus;
    for (std::uint64_t k = 2; k <= n; ++k) {
        auto c = static_cast<unsigned __int128>(k % 2 == 0 ? am : bm);
        auto next = static_cast<std::uint64_t>((c * v1 + v0) % m);
        v0 = v1;
        v1 = next;
    }
    return v1;
}

} // namespace bpfib::oracle
