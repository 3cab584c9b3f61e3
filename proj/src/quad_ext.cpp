#include "bpfib/quad_ext.hpp"

#include <ostream>
#include <utility>

#include "bpfib/errors.hpp"

namespace bpfib {

QuadExt::QuadExt(Rational rational_part, Rational radical_part, Rational radicand)
    : u_(std::move(rational_part)), v_(std::move(radical_part)), d_(std::move(radicand)) {}

QuadExt QuadExt::embed(Rational r, Rational radicand) { return QuadExt(std::move(r), Rational{}, std::move(radicand)); }

Rational QuadExt::norm() const { return u_ * u_ - v_ * v_ * d_; }

QuadExt QuadExt::conjugate() const { return QuadExt(u_, -v_, d_); }

QuadExt QuadExt::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw DivisionByZero("quadratic-extension element " + to_string() + " has zero norm");
    Rational s = n.reciprocal();
    return QuadExt(u_ * s, -v_ * s, d_);
}

QuadExt QuadExt::pow(std::int64_t exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    QuadExt result = one_like(*this);
    QuadExt base = *this;
    auto e = static_cast<std::uint64_t>(exponent);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

void QuadExt::require_same_radicand(const QuadExt& rhs, const char* op) const {
    if (d_ != rhs.d_)
        throw ContractViolation(std::string("QuadExt ") + op + " with radicands " + d_.to_string() + " and " +
                                rhs.d_.to_string());
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
    require_same_radicand(rhs, "addition");
    u_ += rhs.u_;
    v_ += rhs.v_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
    require_same_radicand(rhs, "subtraction");
    u_ -= rhs.u_;
    v_ -= rhs.v_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
    require_same_radicand(rhs, "multiplication");
    Rational u = u_ * rhs.u_ + v_ * rhs.v_ * d_;
    Rational v = u_ * rhs.v_ + rhs.u_ * v_;
    u_ = std::move(u);
    v_ = std::move(v);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
    require_same_radicand(rhs, "division");
    return *this *= rhs.inverse();
}

QuadExt& QuadExt::operator*=(const Rational& rhs) {
    u_ *= rhs;
    v_ *= rhs;
    return *this;
}

QuadExt QuadExt::operator-() const { return QuadExt(-u_, -v_, d_); }

std::string QuadExt::to_string() const {
    std::string out = u_.to_string();
    if (v_.sign() < 0)
        out += " - " + (-v_).to_string();
    else
        out += " + " + v_.to_string();
    return out + "√" + d_.to_string();
}

std::ostream& operator<<(std::ostream& os, const QuadExt& z) { return os << z.to_string(); }

QuadExt inverse(const QuadExt& z) {
    if (z.norm().is_zero()) throw NotInvertible("quadratic-extension element " + z.to_string() + " has zero norm");
    return z.inverse();
}

} // namespace bpfib
