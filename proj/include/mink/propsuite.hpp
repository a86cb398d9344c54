#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mink/norms.hpp"

namespace mink {

struct PropResult {
    std::string name;
    bool pass = false;
    std::string details; // worst value / witness, for the report table
};

struct NamedNorm {
    std::string name;
    NormSpec norm;
    bool radon = false;
};

// The fixed norm library the property checks sweep over.
std::vector<NamedNorm> standard_norm_library(std::uint64_t seed = 2026);

// Known suite names: plane-core, norms, radon, triangle, isoperimetry,
// projections, all.
std::vector<PropResult> run_property_suite(const std::string& suite, std::uint64_t seed);

} // namespace mink
