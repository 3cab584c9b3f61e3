#include "bpfib/rational.hpp"

#include <ostream>
#include <utility>

#include "bpfib/errors.hpp"

namespace bpfib {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator))) {}

Rational::Rational(mpz_class numerator, mpz_class denominator) {
    if (denominator == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(std::move(numerator), std::move(denominator));
    value_.canonicalize();
}

Rational::Rational(mpz_class integer) : value_(std::move(integer)) {}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(std::move(n), std::move(d));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(std::int64_t exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    mpz_class num, den;
    auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    // Powers of coprime integers stay coprime, so no canonicalize needed.
    mpq_class out;
    out.get_num() = std::move(num);
    out.get_den() = std::move(den);
    return Rational(std::move(out));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational inverse(const Rational& r) {
    if (r.is_zero()) throw NotInvertible("zero rational has no inverse");
    return r.reciprocal();
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.numerator().get_mpz_t()) || !mpz_perfect_square_p(r.denominator().get_mpz_t()))
        return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), r.numerator().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.denominator().get_mpz_t());
    return Rational(std::move(n), std::move(d));
}

} // namespace bpfib
