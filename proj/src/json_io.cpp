#include "bpfib/json_io.hpp"

#include "bpfib/errors.hpp"

namespace bpfib {

namespace {

template <class T, class Entry>
Json matrix_json(const Mat2<T>& m, Entry entry) {
    return Json{{"e11", entry(m.e11)}, {"e12", entry(m.e12)}, {"e21", entry(m.e21)}, {"e22", entry(m.e22)}};
}

template <class T, class Entry>
Mat2<T> matrix_from(const Json& j, Entry entry) {
    if (!j.is_object()) throw ParseError("matrix JSON must be an object");
    for (const char* key : {"e11", "e12", "e21", "e22"})
        if (!j.contains(key)) throw ParseError(std::string("matrix JSON missing '") + key + "'");
    return {entry(j.at("e11")), entry(j.at("e12")), entry(j.at("e21")), entry(j.at("e22"))};
}

Json vec_json(const RationalVec& v) { return Json::array({to_json(v[0]), to_json(v[1])}); }

RationalVec vec_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("expected a 2-element array");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

} // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
    return arr;
}

Json to_json(const Mat2<Rational>& m) {
    return matrix_json(m, [](const Rational& r) { return to_json(r); });
}

Json to_json(const Mat2<Poly>& m) {
    return matrix_json(m, [](const Poly& p) { return to_json(p); });
}

Json to_json(const HadamardSpectrum& s) {
    Json j;
    j["det"] = to_json(s.determinant);
    j["trace"] = to_json(s.trace);
    j["eigenvalues"] = vec_json(s.eigenvalues);
    j["eigenvectors"] = Json::array({vec_json(s.eigenvectors[0]), vec_json(s.eigenvectors[1])});
    j["inverse"] = s.inverse ? to_json(*s.inverse) : Json(nullptr);
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a JSON string");
    return Rational::parse(j.get<std::string>());
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
    std::vector<Rational> c;
    for (const auto& item : j) c.push_back(rational_from_json(item));
    return Poly(std::move(c));
}

Mat2<Rational> rational_matrix_from_json(const Json& j) { return matrix_from<Rational>(j, rational_from_json); }

Mat2<Poly> poly_matrix_from_json(const Json& j) { return matrix_from<Poly>(j, poly_from_json); }

HadamardSpectrum spectrum_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("spectrum JSON must be an object");
    HadamardSpectrum s;
    try {
        s.determinant = rational_from_json(j.at("det"));
        s.trace = rational_from_json(j.at("trace"));
        s.eigenvalues = vec_from(j.at("eigenvalues"));
        const Json& vecs = j.at("eigenvectors");
        if (!vecs.is_array() || vecs.size() != 2) throw ParseError("eigenvectors must hold two vectors");
        s.eigenvectors = {vec_from(vecs[0]), vec_from(vecs[1])};
        const Json& inv = j.at("inverse");
        if (!inv.is_null()) s.inverse = rational_matrix_from_json(inv);
    } catch (const Json::out_of_range& e) {
        throw ParseError(std::string("spectrum JSON: ") + e.what());
    }
    return s;
}

} // namespace bpfib
