#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gdpoly {

struct PropertySuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;  // empty when clean
    bool pass() const { return failures == 0; }
};

// Randomized operator laws: ring axioms, [pd_k, dx] = pd_{k-1}, delta o dx = 0,
// antiderivative round trip and obstruction detection, delta(u1 delta f) = 0,
// delta(u delta f) = n delta f on homogeneous f, the (d,w) -> (d,w+1) slot
// shift of dx, and print/parse round trips. The seed is part of the report so
// every run is reproducible.
std::vector<PropertySuiteResult> run_property_suites(std::uint64_t seed,
                                                     int cases_per_suite);

}  // namespace gdpoly
