#pragma once

#include <string>
#include <vector>

#include "wmn/errors.hpp"

namespace wmn::evalsim {

struct PerformanceRecord {
    std::string scheme;
    double tid = 0.0;
    double throughput_mbps = 0.0;
};

/// Spearman rank correlation with fractional mid-ranks for ties. Degenerate
/// inputs (either variable constant) correlate to 0 by convention. Requires
/// at least three records.
double spearman_rank_correlation(const std::vector<double>& a, const std::vector<double>& b);

double tid_performance_correlation(const std::vector<PerformanceRecord>& records);

}  // namespace wmn::evalsim
