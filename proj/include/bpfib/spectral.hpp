#pragma once

/**
 * @file spectral.hpp
 * @brief Eigen-analysis of Q_q over Q(√D), Binet evaluation, and the
 *        spectra of the Hadamard products.
 */

#include <array>
#include <cstdint>
#include <optional>

#include "bpfib/genmatrix.hpp"
#include "bpfib/mat2.hpp"
#include "bpfib/quad_ext.hpp"
#include "bpfib/rational.hpp"
#include "bpfib/sequences.hpp"

namespace bpfib {

using QuadVec = std::array<QuadExt, 2>;
using RationalVec = std::array<Rational, 2>;

// Diagonalization Q_q = U·V·U⁻¹ at a fixed x.
struct EigenSystem {
    QuadExt eigenvalue1;  // α/(ax)
    QuadExt eigenvalue2;  // β/(ax)
    QuadVec eigenvector1; // [b/a, −β/(ax)]
    QuadVec eigenvector2; // [b/a, −α/(ax)]
    Mat2<QuadExt> diagonalizer;
    Mat2<QuadExt> diagonal;
};

/// α, β are the roots of r² − abx²·r − abx² = 0 with radicand
/// D = a²b²x⁴ + 4abx². Requires x ≠ 0 (InvalidParameter) and
/// abx² ≠ −4 (DegenerateParameter, repeated root).
EigenSystem qq_eigen(const ParamSet& p, const Rational& x);

/// α and β as a pair, same preconditions as qq_eigen.
std::array<QuadExt, 2> binet_roots(const ParamSet& p, const Rational& x);

/// U·V^n·U⁻¹.
Mat2<QuadExt> reconstruct_power(const EigenSystem& es, std::int64_t n);

/// q(n)(x) = a^(1−ε(n)) / ((ab)^⌊n/2⌋ x^(n−1)) · (α^n − β^n)/(α − β),
/// evaluated in Q(√D). Throws ConsistencyError if the radical part of the
/// result does not cancel.
Rational binet_q(std::int64_t n, const ParamSet& p, const Rational& x);

/// Same formula in double precision (complex roots when D < 0). Magnitude
/// is carried in log space, so overflow yields ±infinity instead of NaN.
double binet_q_float(std::int64_t n, const ParamSet& p, const Rational& x);

struct HadamardSpectrum {
    Rational determinant;
    Rational trace;
    RationalVec eigenvalues;
    std::array<RationalVec, 2> eigenvectors;
    std::optional<Mat2<Rational>> inverse; // empty when determinant = 0
};

/**
 * Spectrum of hadamard_q(n) or hadamard_l(n), n ≥ 1, read off the matrix
 * itself and then checked against the closed forms below (ConsistencyError
 * on mismatch).
 *
 * Eigenvectors are normalized to [±b/a, 1] for q and [1, ±b/a] for l, and
 * the pair is ordered with the +b/a vector first.
 */
HadamardSpectrum hadamard_spectrum(Family which, std::int64_t n, const ParamSet& p);

// Closed forms for the Hadamard matrices as this library defines them.
// For q they coincide with the usual printed statements except the odd-n
// inverse's lower-right entry; for l at odd n every sign-sensitive value is
// the negative of the printed one (hadamard_l carries the extra (−1)^n).
Rational hadamard_det_closed(Family which, std::int64_t n, const ParamSet& p);
Rational hadamard_trace_closed(Family which, std::int64_t n, const ParamSet& p);
RationalVec hadamard_eigenvalues_closed(Family which, std::int64_t n, const ParamSet& p);
std::array<RationalVec, 2> hadamard_eigenvectors_closed(Family which, const ParamSet& p);
/// Empty when the closed-form determinant is zero.
std::optional<Mat2<Rational>> hadamard_inverse_closed(Family which, std::int64_t n, const ParamSet& p);

} // namespace bpfib
