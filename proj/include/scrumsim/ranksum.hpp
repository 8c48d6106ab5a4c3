#pragma once

#include <vector>

namespace scrumsim {

// Two-sided Mann-Whitney rank-sum p-value via the normal approximation with
// midrank ties, tie-corrected variance, and a 0.5 continuity correction.
// Degenerate pooled samples (every value tied) yield p = 1. Throws
// std::invalid_argument when either sample is empty.
double mann_whitney_p(const std::vector<double>& sample_a,
                      const std::vector<double>& sample_b);

}  // namespace scrumsim
