#pragma once

#include <optional>

#include "sftkit/bigint.hpp"
#include "sftkit/core.hpp"

namespace sftkit::entropy {

// Per-n entropy bound. `value` = log2(count) / n^d, present only when the
// count is positive. Counts are over admissible patterns, which dominate
// the extensible counts in the entropy limit, so values are upper bounds.
struct EntropyEstimate {
    int side = 0;
    BigUint count;
    std::optional<double> value;
};

// Exact count of admissible patterns with support [0,n)^d.
BigUint count_admissible_blocks_sided(const core::SftSpec& X, int n);

EntropyEstimate entropy_upper_bound(const core::SftSpec& X, int n);

}  // namespace sftkit::entropy
