#pragma once

#include <cstdint>
#include <vector>

#include "gyro/axioms.hpp"
#include "gyro/permutation.hpp"

namespace gyro::detail {

/// Everything verify_axioms computes on the way. The identity, inverse and
/// gyration fields are only meaningful when report.valid.
struct AxiomAnalysis {
    ValidationReport report;
    Element identity = 0;
    std::vector<Element> left_inverse;
    std::vector<Permutation> gyrations;
    std::vector<std::uint32_t> gyr_index;
};

AxiomAnalysis analyze(const CayleyTable& table, Execution exec);

}  // namespace gyro::detail
