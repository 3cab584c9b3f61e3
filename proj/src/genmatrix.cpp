#include "bpfib/genmatrix.hpp"

#include <string>

#include "bpfib/errors.hpp"

namespace bpfib {

namespace {

Rational sign_pow(std::int64_t k) { return parity_eps(k) ? Rational{-1} : Rational{1}; }

// Shared body of the Q_q closed forms; Q(k) yields q(k) in the scalar ring.
template <class T, class Term>
Mat2<T> qq_closed_impl(std::int64_t n, const ParamSet& p, Term q) {
    const Rational& r = p.ratio();
    if (n >= 0) {
        Rational outer = r.pow(floor_half(n));
        Rational diag = parity_eps(n) ? r : Rational{1};
        return outer * Mat2<T>{diag * q(n + 1), r * q(n), q(n), diag * q(n - 1)};
    }
    const std::int64_t m = -n;
    if (parity_eps(m) == 0) {
        Rational outer = r.pow(-(m / 2));
        return outer * Mat2<T>{q(m - 1), -(r * q(m)), -q(m), q(m + 1)};
    }
    Rational outer = r.pow(-((m + 1) / 2));
    return outer * Mat2<T>{-(r * q(m - 1)), r * q(m), q(m), -(r * q(m + 1))};
}

} // namespace

Mat2<Rational> mat_qq(const ParamSet& p, const Rational& x) { return {p.b() * x, p.ratio(), Rational{1}, Rational{}}; }

Mat2<Poly> mat_qq_symbolic(const ParamSet& p) {
    return {Poly::monomial(p.b(), 1), Poly(p.ratio()), Poly(Rational{1}), Poly{}};
}

Mat2<Rational> mat_ql(const ParamSet& p) {
    const Rational& a = p.a();
    const Rational& b = p.b();
    Rational two_a_over_b = Rational{2} * a / b;
    return {a * a + two_a_over_b, a * a / b, a, two_a_over_b};
}

Mat2<Rational> qq_pow_closed(std::int64_t n, const ParamSet& p, const Rational& x) {
    return qq_closed_impl<Rational>(n, p, [&](std::int64_t k) { return bp_fib_at(k, p, x); });
}

Mat2<Poly> qq_pow_closed_symbolic(std::int64_t n, const ParamSet& p) {
    // The only negative index reached is q(−1)(x) = 1, at n = 0.
    return qq_closed_impl<Poly>(n, p, [&](std::int64_t k) { return k < 0 ? bp_fib_poly(-k, p) : bp_fib_poly(k, p); });
}

Mat2<Rational> ql_pow_closed(std::int64_t n, const ParamSet& p) {
    if (n < 0) throw ContractViolation("ql_pow_closed needs n >= 0, got " + std::to_string(n));
    const Rational& r = p.ratio();
    Rational scale = r.reciprocal().pow(n) * p.ab_plus_4().pow(n / 2);
    if (parity_eps(n) == 0) {
        Rational qn = bp_fib(n, p);
        return scale * Mat2<Rational>{bp_fib(n + 1, p), qn, r * qn, bp_fib(n - 1, p)};
    }
    Rational ln = bp_lucas(n, p);
    return scale * Mat2<Rational>{bp_lucas(n + 1, p), ln, r * ln, bp_lucas(n - 1, p)};
}

Mat2<Rational> hadamard_direct(const Mat2<Rational>& m, std::int64_t n) {
    return mat_hadamard(mat_pow(m, n), mat_pow(m, -n));
}

Mat2<Rational> hadamard_q(std::int64_t n, const ParamSet& p) {
    if (n < 0) throw ContractViolation("hadamard_q needs n >= 0, got " + std::to_string(n));
    Mat2<Rational> power = mat_pow(mat_qq(p, Rational{1}), n);
    Rational scale = sign_pow(n) * p.ratio().reciprocal().pow(n);
    return scale * mat_hadamard(power, mat_adj(power));
}

Mat2<Rational> hadamard_l(std::int64_t n, const ParamSet& p) {
    if (n < 0) throw ContractViolation("hadamard_l needs n >= 0, got " + std::to_string(n));
    p.require_nondegenerate("Lucas Hadamard product");
    Mat2<Rational> power = mat_pow(mat_ql(p), n);
    Rational base = p.b() * p.b() / (p.a() * p.a() * p.ab_plus_4());
    Rational scale = sign_pow(n) * base.pow(n);
    return scale * mat_hadamard(power, mat_adj(power));
}

Mat2<Rational> matrix_recurrence_residual(Family which, std::int64_t n, const ParamSet& p) {
    if (which == Family::q) {
        Mat2<Rational> q = mat_qq(p, Rational{1});
        auto combo = p.b() * mat_pow(q, n - 1) + p.ratio() * mat_pow(q, n - 2);
        return mat_pow(q, n) - combo;
    }
    p.require_nondegenerate("Lucas matrix recurrence");
    Mat2<Rational> l = mat_ql(p);
    Rational lead = p.b() / (p.a() * p.ab_plus_4());
    auto combo = lead * mat_pow(l, n + 1) + p.ratio().reciprocal() * mat_pow(l, n - 1);
    return mat_pow(l, n) - combo;
}

} // namespace bpfib
