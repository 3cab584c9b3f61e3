#pragma once

// JSON forms shared by the CLI and the audit report.
//   matrix:   {"e11": "...", "e12": "...", "e21": "...", "e22": "..."}
//             (Poly entries are the coefficient array instead of a string)
//   spectrum: {"det": "...", "trace": "...", "eigenvalues": [..],
//              "eigenvectors": [[..],[..]], "inverse": matrix | null}

#include <json.hpp>

#include "bpfib/mat2.hpp"
#include "bpfib/poly.hpp"
#include "bpfib/rational.hpp"
#include "bpfib/spectral.hpp"

namespace bpfib {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const Poly& p);
Json to_json(const Mat2<Rational>& m);
Json to_json(const Mat2<Poly>& m);
Json to_json(const HadamardSpectrum& s);

Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
Mat2<Rational> rational_matrix_from_json(const Json& j);
Mat2<Poly> poly_matrix_from_json(const Json& j);
HadamardSpectrum spectrum_from_json(const Json& j);

} // namespace bpfib
