#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wmn/correlation.hpp"
#include "wmn/schedule.hpp"

namespace wmn::evalsim {

/// One row of the results CSV:
/// scheme,variant,seed,class,case,aggregate_mbps,per_flow
/// where per_flow is a JSON blob (one object per combination run).
struct ResultRow {
    std::string scheme;
    std::string variant;
    std::uint64_t seed = 0;
    int test_class = 0;
    std::string case_name;
    double aggregate_mbps = 0.0;
    std::string per_flow_json;
};

std::string per_flow_json(const CaseResult& result);

std::string results_to_csv(const std::vector<ResultRow>& rows);
void save_results_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path);
std::vector<ResultRow> load_results_csv(const std::filesystem::path& path);

std::string correlation_report_json(const std::vector<PerformanceRecord>& records,
                                    double rho);

}  // namespace wmn::evalsim
