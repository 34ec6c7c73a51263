#pragma once

#include "gdpoly/diffpoly.hpp"

#include <cstdint>

namespace gdpoly {

// Deterministic generator for property suites. Bounds: total degree <= 4,
// jet order <= 4, genus <= 2, small rational coefficients. Avoids the
// standard distributions so a fixed seed yields the same stream everywhere.
class RandomPolyGen {
public:
    explicit RandomPolyGen(std::uint64_t seed) : state_(seed ? seed : 1) {}

    DiffPoly next();
    // Genus-0 polynomial, every monomial of total degree exactly n.
    DiffPoly next_homogeneous(int n);
    std::uint64_t next_u64();
    // Uniform-ish integer in [0, bound).
    int next_below(int bound);

private:
    std::uint64_t state_;
};

}  // namespace gdpoly
