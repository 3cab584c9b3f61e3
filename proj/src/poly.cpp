#include "bpfib/poly.hpp"

#include <ostream>
#include <utility>

#include <json.hpp>

#include "bpfib/errors.hpp"

namespace bpfib {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly Poly::x() { return monomial(Rational{1}, 1); }

Poly Poly::monomial(Rational coefficient, std::size_t degree) {
    std::vector<Rational> c(degree + 1);
    c[degree] = std::move(coefficient);
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }

Rational Poly::eval(const Rational& x0) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly{};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string Poly::to_json_text() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(c.to_string());
    return arr.dump();
}

Poly Poly::parse_json_text(std::string_view text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("polynomial JSON must be an array of rational strings");
    std::vector<Rational> c;
    for (const auto& item : arr) {
        if (!item.is_string()) throw ParseError("polynomial coefficient must be a string");
        c.push_back(Rational::parse(item.get<std::string>()));
    }
    return Poly(std::move(c));
}

std::string Poly::to_pretty() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool negative = c.sign() < 0;
        Rational mag = c.abs();
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (k == 0 || mag != Rational{1}) out += mag.to_string();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_pretty(); }

Poly inverse(const Poly& p) {
    if (p.is_zero() || !p.is_constant())
        throw NotInvertible("polynomial " + p.to_pretty() + " is not a unit");
    return Poly(p.coefficient(0).reciprocal());
}

} // namespace bpfib
