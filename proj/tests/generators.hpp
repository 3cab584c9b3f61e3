#pragma once

// Small random generators for the property tests. Seeds are fixed so a
// failure reproduces.

#include <cstdint>
#include <random>
#include <vector>

#include "bpfib/poly.hpp"
#include "bpfib/rational.hpp"
#include "bpfib/sequences.hpp"

namespace gen {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eedULL);
    return engine;
}

inline std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline bpfib::Rational rational(std::int64_t bound = 50) {
    return bpfib::Rational(int_in(-bound, bound), int_in(1, bound));
}

inline bpfib::Rational nonzero_rational(std::int64_t bound = 50) {
    for (;;) {
        auto r = rational(bound);
        if (!r.is_zero()) return r;
    }
}

// Big values too, so GMP paths beyond one limb get exercised.
inline bpfib::Rational wide_rational() {
    bpfib::Rational r = rational(1'000'000'007);
    return r * r.pow(int_in(0, 3));
}

inline bpfib::ParamSet params(std::int64_t bound = 6) {
    return bpfib::ParamSet(nonzero_rational(bound), nonzero_rational(bound));
}

inline bpfib::ParamSet nondegenerate_params(std::int64_t bound = 6) {
    for (;;) {
        auto p = params(bound);
        if (!p.degenerate()) return p;
    }
}

inline bpfib::Poly poly(std::int64_t max_degree = 6) {
    std::vector<bpfib::Rational> c;
    for (std::int64_t i = 0, d = int_in(-1, max_degree); i <= d; ++i) c.push_back(rational(20));
    return bpfib::Poly(c);
}

} // namespace gen
