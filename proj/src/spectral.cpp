#include "bpfib/spectral.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "bpfib/errors.hpp"

namespace bpfib {

namespace {

void require_distinct_roots(const ParamSet& p, const Rational& x) {
    if (x.is_zero()) throw InvalidParameter("Binet/eigen analysis needs x != 0");
    if (p.a() * p.b() * x * x == Rational{-4})
        throw DegenerateParameter("Binet/eigen analysis needs a*b*x^2 != -4 (repeated root), got " + p.to_string() +
                                  " x=" + x.to_string());
}

std::string where(Family which, std::int64_t n, const ParamSet& p) {
    return std::string(which == Family::q ? "H_q" : "H_l") + " n=" + std::to_string(n) + " " + p.to_string();
}

using Complex = std::complex<double>;

Complex ipow(Complex z, std::uint64_t e) {
    Complex out{1.0, 0.0};
    while (e > 0) {
        if (e & 1) out *= z;
        e >>= 1;
        if (e > 0) z *= z;
    }
    return out;
}

} // namespace

std::array<QuadExt, 2> binet_roots(const ParamSet& p, const Rational& x) {
    require_distinct_roots(p, x);
    Rational s = p.a() * p.b() * x * x;
    Rational radicand = s * s + Rational{4} * s;
    Rational half{1, 2};
    return {QuadExt(s * half, half, radicand), QuadExt(s * half, -half, radicand)};
}

EigenSystem qq_eigen(const ParamSet& p, const Rational& x) {
    auto [alpha, beta] = binet_roots(p, x);
    const Rational inv_ax = (p.a() * x).reciprocal();
    const QuadExt r = QuadExt::embed(p.ratio(), alpha.radicand());
    QuadExt lambda1 = alpha * inv_ax;
    QuadExt lambda2 = beta * inv_ax;
    QuadExt zero = zero_like(alpha);
    EigenSystem es{
        lambda1,
        lambda2,
        {r, -lambda2},
        {r, -lambda1},
        {r, r, -lambda2, -lambda1},
        {lambda1, zero, zero, lambda2},
    };
    return es;
}

Mat2<QuadExt> reconstruct_power(const EigenSystem& es, std::int64_t n) {
    return es.diagonalizer * mat_pow(es.diagonal, n) * mat_inverse(es.diagonalizer);
}

Rational binet_q(std::int64_t n, const ParamSet& p, const Rational& x) {
    auto [alpha, beta] = binet_roots(p, x);
    Rational scale = p.a().pow(1 - parity_eps(n)) / ((p.a() * p.b()).pow(floor_half(n)) * x.pow(n - 1));
    QuadExt value = (alpha.pow(n) - beta.pow(n)) / (alpha - beta) * scale;
    if (!value.is_rational())
        throw ConsistencyError("Binet radical part did not cancel at n=" + std::to_string(n) + " " + p.to_string() +
                               ": " + value.to_string());
    return value.rational_part();
}

double binet_q_float(std::int64_t n, const ParamSet& p, const Rational& x) {
    require_distinct_roots(p, x);
    if (n == 0) return 0.0;
    const Rational s_exact = p.a() * p.b() * x * x;
    const double s = s_exact.to_double();
    const Complex sqrt_d = std::sqrt(Complex((s_exact * s_exact + Rational{4} * s_exact).to_double(), 0.0));
    const Complex alpha = (s + sqrt_d) / 2.0;
    const Complex beta = (s - sqrt_d) / 2.0;

    // α^n − β^n = ±dom^n·(1 − (other/dom)^n) with |other/dom|^n ≤ 1.
    const bool alpha_larger = std::abs(alpha) >= std::abs(beta);
    const bool dom_is_alpha = (n > 0) == alpha_larger;
    const Complex dom = dom_is_alpha ? alpha : beta;
    const Complex other = dom_is_alpha ? beta : alpha;
    const std::uint64_t mag = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    const Complex ratio_pow = ipow(n > 0 ? other / dom : dom / other, mag);
    const Complex term = (1.0 - ratio_pow) / (alpha - beta);

    // Scalar prefactor a^(1−ε) / ((ab)^⌊n/2⌋ x^(n−1)), split into sign and log magnitude.
    const double a = p.a().to_double();
    const double ab = (p.a() * p.b()).to_double();
    const double xd = x.to_double();
    const int eps = parity_eps(n);
    const std::int64_t fl = floor_half(n);
    double sign = 1.0;
    if (eps == 0 && a < 0) sign = -sign;
    if (ab < 0 && (fl % 2 != 0)) sign = -sign;
    if (xd < 0 && ((n - 1) % 2 != 0)) sign = -sign;
    const double log_scale = (1 - eps) * std::log(std::abs(a)) - static_cast<double>(fl) * std::log(std::abs(ab)) -
                             static_cast<double>(n - 1) * std::log(std::abs(xd));

    const double nd = static_cast<double>(n);
    const double log_mag = log_scale + nd * std::log(std::abs(dom)) + std::log(std::abs(term));
    double phase = nd * std::arg(dom) + std::arg(term);
    if (!dom_is_alpha) phase += std::numbers::pi;
    return sign * std::exp(log_mag) * std::cos(phase);
}

Rational hadamard_det_closed(Family which, std::int64_t n, const ParamSet& p) {
    if (which == Family::l) p.require_nondegenerate("Lucas Hadamard closed form");
    const Rational two{2};
    if (parity_eps(n) == 0) {
        Rational q = bp_fib(n, p);
        return Rational{1} + two * p.ratio() * q * q;
    }
    if (which == Family::q) {
        Rational q = bp_fib(n, p);
        return Rational{1} - two * q * q;
    }
    Rational l = bp_lucas(n, p);
    return Rational{1} + two * p.b() / (p.a() * p.ab_plus_4()) * l * l;
}

Rational hadamard_trace_closed(Family which, std::int64_t n, const ParamSet& p) {
    if (which == Family::l) p.require_nondegenerate("Lucas Hadamard closed form");
    const Rational two{2};
    if (parity_eps(n) == 0) {
        Rational q = bp_fib(n, p);
        return two * (Rational{1} + p.ratio() * q * q);
    }
    if (which == Family::q) {
        Rational q = bp_fib(n, p);
        return two * (Rational{1} - q * q);
    }
    Rational l = bp_lucas(n, p);
    return -two * (Rational{1} + p.b() / (p.a() * p.ab_plus_4()) * l * l);
}

RationalVec hadamard_eigenvalues_closed(Family which, std::int64_t n, const ParamSet& p) {
    Rational det = hadamard_det_closed(which, n, p);
    if (which == Family::l && parity_eps(n) == 1) return {Rational{-1}, -det};
    return {Rational{1}, det};
}

std::array<RationalVec, 2> hadamard_eigenvectors_closed(Family which, const ParamSet& p) {
    const Rational& r = p.ratio();
    if (which == Family::q) return {RationalVec{r, Rational{1}}, RationalVec{-r, Rational{1}}};
    return {RationalVec{Rational{1}, r}, RationalVec{Rational{1}, -r}};
}

std::optional<Mat2<Rational>> hadamard_inverse_closed(Family which, std::int64_t n, const ParamSet& p) {
    const Rational one{1};
    const Rational& r = p.ratio();
    Rational det = hadamard_det_closed(which, n, p);
    if (det.is_zero()) return std::nullopt;

    if (parity_eps(n) == 0) {
        Rational q2 = bp_fib(n, p);
        q2 *= q2;
        Rational diag = one - r * q2 / det;
        Mat2<Rational> inv_q{diag, r * r * q2 / det, q2 / det, diag};
        return which == Family::q ? inv_q : transpose(inv_q);
    }
    if (which == Family::q) {
        Rational q2 = bp_fib(n, p);
        q2 *= q2;
        Rational diag = one + q2 / det;
        return Mat2<Rational>{diag, -(r * q2 / det), -(q2 / (r * det)), diag};
    }
    const Rational ab4 = p.ab_plus_4();
    const Rational c = p.b() / (p.a() * ab4);
    Rational l2 = bp_lucas(n, p);
    l2 *= l2;
    // The printed odd-n Lucas inverse describes the direct product; hadamard_l
    // is its negative, so the inverse is negated too.
    Rational diag = one - c * l2 / det;
    Mat2<Rational> printed{diag, l2 / (ab4 * det), r * r / ab4 * l2 / det, diag};
    return -printed;
}

HadamardSpectrum hadamard_spectrum(Family which, std::int64_t n, const ParamSet& p) {
    if (n < 1) throw ContractViolation("hadamard_spectrum needs n >= 1, got " + std::to_string(n));
    const Mat2<Rational> h = which == Family::q ? hadamard_q(n, p) : hadamard_l(n, p);

    HadamardSpectrum out;
    out.determinant = mat_det(h);
    out.trace = mat_trace(h);
    auto root = exact_sqrt(out.trace * out.trace - Rational{4} * out.determinant);
    if (!root) throw ConsistencyError("irrational eigenvalues for " + where(which, n, p));
    const Rational half{1, 2};
    RationalVec lambdas{(out.trace + *root) * half, (out.trace - *root) * half};

    const auto canonical = hadamard_eigenvectors_closed(which, p);
    const Rational& r = p.ratio();
    std::array<RationalVec, 2> vecs;
    bool scalar_matrix = false;
    for (int i = 0; i < 2; ++i) {
        Mat2<Rational> shifted = h - lambdas[i] * identity_like(h);
        if (is_zero_matrix(shifted)) {
            // H = λI: every vector is an eigenvector.
            scalar_matrix = true;
            vecs[i] = canonical[i];
            continue;
        }
        RationalVec v = (shifted.e11.is_zero() && shifted.e12.is_zero()) ? RationalVec{shifted.e22, -shifted.e21}
                                                                          : RationalVec{shifted.e12, -shifted.e11};
        const Rational& pivot = which == Family::q ? v[1] : v[0];
        if (pivot.is_zero()) throw ConsistencyError("eigenvector not normalizable for " + where(which, n, p));
        Rational s = pivot.reciprocal();
        vecs[i] = {v[0] * s, v[1] * s};
    }
    if (!scalar_matrix) {
        const Rational& free0 = which == Family::q ? vecs[0][0] : vecs[0][1];
        if (free0 != r) {
            std::swap(vecs[0], vecs[1]);
            std::swap(lambdas[0], lambdas[1]);
        }
    }
    out.eigenvalues = lambdas;
    out.eigenvectors = vecs;
    if (!out.determinant.is_zero()) out.inverse = mat_inverse(h);

    if (out.determinant != hadamard_det_closed(which, n, p) || out.trace != hadamard_trace_closed(which, n, p) ||
        out.eigenvalues != hadamard_eigenvalues_closed(which, n, p) || out.eigenvectors != canonical ||
        out.inverse != hadamard_inverse_closed(which, n, p))
        throw ConsistencyError("spectrum disagrees with its closed form for " + where(which, n, p));
    return out;
}

} // namespace bpfib
