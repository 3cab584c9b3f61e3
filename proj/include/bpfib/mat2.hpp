#pragma once

/**
 * @file mat2.hpp
 * @brief 2×2 matrices over an exact scalar ring.
 *
 * The scalar type must provide +, −, *, unary −, == and the ADL hooks
 * zero_like, one_like and inverse (see rational.hpp, poly.hpp,
 * quad_ext.hpp). The *_like hooks take a sample value so that QuadExt
 * identities inherit the right radicand.
 */

#include <concepts>
#include <cstdint>
#include <utility>

#include "bpfib/errors.hpp"

namespace bpfib {

template <class T>
concept ScalarRing = requires(const T& x) {
    { x + x } -> std::convertible_to<T>;
    { x - x } -> std::convertible_to<T>;
    { x * x } -> std::convertible_to<T>;
    { -x } -> std::convertible_to<T>;
    { x == x } -> std::convertible_to<bool>;
    { zero_like(x) } -> std::convertible_to<T>;
    { one_like(x) } -> std::convertible_to<T>;
    { inverse(x) } -> std::convertible_to<T>;
};

template <ScalarRing T>
struct Mat2 {
    T e11, e12, e21, e22;

    friend bool operator==(const Mat2&, const Mat2&) = default;

    template <class F>
    auto map(F&& f) const -> Mat2<decltype(f(e11))> {
        return {f(e11), f(e12), f(e21), f(e22)};
    }
};

template <ScalarRing T>
Mat2<T> operator*(const Mat2<T>& x, const Mat2<T>& y) {
    return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
            x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
}

template <ScalarRing T>
Mat2<T> operator+(const Mat2<T>& x, const Mat2<T>& y) {
    return {x.e11 + y.e11, x.e12 + y.e12, x.e21 + y.e21, x.e22 + y.e22};
}

template <ScalarRing T>
Mat2<T> operator-(const Mat2<T>& x, const Mat2<T>& y) {
    return {x.e11 - y.e11, x.e12 - y.e12, x.e21 - y.e21, x.e22 - y.e22};
}

template <ScalarRing T>
Mat2<T> operator-(const Mat2<T>& x) {
    return {-x.e11, -x.e12, -x.e21, -x.e22};
}

template <ScalarRing T, class S>
    requires requires(const S& s, const T& t) { { s * t } -> std::convertible_to<T>; }
Mat2<T> operator*(const S& s, const Mat2<T>& x) {
    return {s * x.e11, s * x.e12, s * x.e21, s * x.e22};
}

template <ScalarRing T>
Mat2<T> identity_like(const Mat2<T>& m) {
    return {one_like(m.e11), zero_like(m.e11), zero_like(m.e11), one_like(m.e11)};
}

template <ScalarRing T>
Mat2<T> zero_matrix_like(const Mat2<T>& m) {
    return {zero_like(m.e11), zero_like(m.e11), zero_like(m.e11), zero_like(m.e11)};
}

template <ScalarRing T>
bool is_zero_matrix(const Mat2<T>& m) {
    return m == zero_matrix_like(m);
}

template <ScalarRing T>
Mat2<T> transpose(const Mat2<T>& m) {
    return {m.e11, m.e21, m.e12, m.e22};
}

template <ScalarRing T>
T mat_det(const Mat2<T>& m) {
    return m.e11 * m.e22 - m.e12 * m.e21;
}

template <ScalarRing T>
T mat_trace(const Mat2<T>& m) {
    return m.e11 + m.e22;
}

template <ScalarRing T>
Mat2<T> mat_adj(const Mat2<T>& m) {
    return {m.e22, -m.e12, -m.e21, m.e11};
}

/// Entrywise product.
template <ScalarRing T>
Mat2<T> mat_hadamard(const Mat2<T>& x, const Mat2<T>& y) {
    return {x.e11 * y.e11, x.e12 * y.e12, x.e21 * y.e21, x.e22 * y.e22};
}

/// adj(M)/det(M). Throws NotInvertible when det(M) is not a unit of the
/// scalar ring.
template <ScalarRing T>
Mat2<T> mat_inverse(const Mat2<T>& m) {
    T inv_det = inverse(mat_det(m));
    return inv_det * mat_adj(m);
}

/// Binary exponentiation; O(log |n|) products. Negative n inverts first.
template <ScalarRing T>
Mat2<T> mat_pow(const Mat2<T>& m, std::int64_t n) {
    Mat2<T> base = n < 0 ? mat_inverse(m) : m;
    // Avoid negating INT64_MIN.
    auto e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    Mat2<T> result = identity_like(m);
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

} // namespace bpfib
