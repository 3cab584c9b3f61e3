#include "bpfib/sequences.hpp"

#include <algorithm>
#include <string>

#include "bpfib/errors.hpp"

namespace bpfib {

namespace {

// (−1)^k
Rational sign_pow(std::int64_t k) { return parity_eps(k) ? Rational{-1} : Rational{1}; }

std::uint64_t magnitude(std::int64_t n) {
    return n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
}

// Forward recurrence from (v0, v1) with coefficient `even` at even steps
// and `odd` at odd steps. Returns the k-th term, k ≥ 0.
Rational run_recurrence(std::uint64_t k, Rational v0, Rational v1, const Rational& even, const Rational& odd) {
    if (k == 0) return v0;
    for (std::uint64_t i = 2; i <= k; ++i) {
        Rational next = (i % 2 == 0 ? even : odd) * v1 + v0;
        v0 = std::move(v1);
        v1 = std::move(next);
    }
    return v1;
}

} // namespace

ParamSet::ParamSet(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero()) throw InvalidParameter("parameter a must be nonzero");
    if (b_.is_zero()) throw InvalidParameter("parameter b must be nonzero");
    ratio_ = b_ / a_;
}

void ParamSet::require_nondegenerate(std::string_view what) const {
    if (degenerate())
        throw DegenerateParameter(std::string(what) + " requires ab != -4 (got a=" + a_.to_string() +
                                  ", b=" + b_.to_string() + ")");
}

std::string ParamSet::to_string() const { return "a=" + a_.to_string() + " b=" + b_.to_string(); }

int parity_eps(std::int64_t n) { return static_cast<int>(magnitude(n) & 1u); }

std::int64_t floor_half(std::int64_t n) { return n >= 0 ? n / 2 : -((-(n + 1)) / 2) - 1; }

Rational bp_fib(std::int64_t n, const ParamSet& p) {
    Rational v = run_recurrence(magnitude(n), Rational{0}, Rational{1}, p.a(), p.b());
    if (n < 0 && parity_eps(n) == 0) v = -v;
    return v;
}

Rational bp_lucas(std::int64_t n, const ParamSet& p) {
    Rational v = run_recurrence(magnitude(n), Rational{2}, p.a(), p.b(), p.a());
    if (n < 0 && parity_eps(n) == 1) v = -v;
    return v;
}

std::vector<Rational> bp_fib_terms(std::size_t count, const ParamSet& p) {
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i < 2)
            out.emplace_back(static_cast<int>(i));
        else
            out.push_back((i % 2 == 0 ? p.a() : p.b()) * out[i - 1] + out[i - 2]);
    }
    return out;
}

std::vector<Rational> bp_lucas_terms(std::size_t count, const ParamSet& p) {
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i == 0)
            out.emplace_back(2);
        else if (i == 1)
            out.push_back(p.a());
        else
            out.push_back((i % 2 == 0 ? p.b() : p.a()) * out[i - 1] + out[i - 2]);
    }
    return out;
}

Poly bp_fib_poly(std::int64_t n, const ParamSet& p) {
    if (n < 0) throw ContractViolation("bp_fib_poly needs n >= 0, got " + std::to_string(n));
    if (n == 0) return Poly{};
    Poly prev, cur{Rational{1}};
    const Poly ax = Poly::monomial(p.a(), 1);
    const Poly bx = Poly::monomial(p.b(), 1);
    for (std::int64_t i = 2; i <= n; ++i) {
        Poly next = (i % 2 == 0 ? ax : bx) * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational bp_fib_at(std::int64_t n, const ParamSet& p, const Rational& x0) {
    Rational v = run_recurrence(magnitude(n), Rational{0}, Rational{1}, p.a() * x0, p.b() * x0);
    if (n < 0 && parity_eps(n) == 0) v = -v;
    return v;
}

std::pair<Rational, Rational> bridge_residuals(std::int64_t n, const ParamSet& p) {
    Rational first = p.ab_plus_4() * bp_fib(n, p) - (bp_lucas(n + 1, p) + bp_lucas(n - 1, p));
    Rational second = bp_lucas(n, p) - (bp_fib(n + 1, p) + bp_fib(n - 1, p));
    return {std::move(first), std::move(second)};
}

Rational cassini_q(std::int64_t n, const ParamSet& p) {
    const int e = parity_eps(n);
    const Rational& a = p.a();
    const Rational& b = p.b();
    Rational q = bp_fib(n, p);
    Rational lead = (e ? b : a) * bp_fib(n + 1, p) * bp_fib(n - 1, p);
    Rational tail = (e ? a : b) * q * q;
    return lead - tail;
}

Rational cassini_l(std::int64_t n, const ParamSet& p) {
    p.require_nondegenerate("Lucas Cassini identity");
    const int e = parity_eps(n);
    const Rational& r = p.ratio();
    Rational l = bp_lucas(n, p);
    Rational lead = (e ? Rational{1} : r) * bp_lucas(n + 1, p) * bp_lucas(n - 1, p);
    Rational tail = (e ? r : Rational{1}) * l * l;
    return lead - tail;
}

Rational fib_add(std::int64_t m, std::int64_t n, const ParamSet& p, Expansion form) {
    if (m < 1 || n < 1)
        throw ContractViolation("fib_add needs m, n >= 1 (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
    const auto terms = bp_fib_terms(static_cast<std::size_t>(std::max(m, n) + 2), p);
    auto q = [&](std::int64_t k) -> const Rational& { return terms[static_cast<std::size_t>(k)]; };
    const bool even_sum = parity_eps(m + n) == 0;
    const Rational& r = p.ratio();
    auto scale = [&](std::int64_t k) { return (!even_sum && parity_eps(k)) ? r : Rational{1}; };
    if (form == Expansion::upper) return scale(m) * q(m + 1) * q(n) + scale(n) * q(m) * q(n - 1);
    return scale(n) * q(m) * q(n + 1) + scale(m) * q(m - 1) * q(n);
}

Rational fib_sub(std::int64_t m, std::int64_t n, const ParamSet& p, Expansion form) {
    if (n < 0 || m < n)
        throw ContractViolation("fib_sub needs m >= n >= 0 (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
    // q(−1) = q(1) covers the n = 0 edge of the lower expansion.
    const auto terms = bp_fib_terms(static_cast<std::size_t>(m + 2), p);
    auto q = [&](std::int64_t k) -> const Rational& { return terms[static_cast<std::size_t>(k < 0 ? -k : k)]; };
    if (parity_eps(m + n) == 0) {
        Rational diff = form == Expansion::upper ? q(m + 1) * q(n) - q(m) * q(n + 1) : q(m - 1) * q(n) - q(m) * q(n - 1);
        return sign_pow(n + 1) * diff;
    }
    const Rational neg_r = -p.ratio();
    auto scale = [&](std::int64_t k) { return parity_eps(k) ? neg_r : Rational{1}; };
    if (form == Expansion::upper) return scale(m) * q(m + 1) * q(n) + scale(n) * q(m) * q(n + 1);
    return scale(n) * q(m) * q(n - 1) + scale(m) * q(m - 1) * q(n);
}

} // namespace bpfib
