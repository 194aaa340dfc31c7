#include "wmn/correlation.hpp"

#include <cmath>

namespace wmn::evalsim {

namespace {

// Fractional mid-ranks: ties share the average of the ranks they span.
std::vector<double> ranks(const std::vector<double>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t below = 0, equal = 0;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] < v[i]) ++below;
            if (v[j] == v[i]) ++equal;
        }
        out[i] = below + 1 + (equal - 1) * 0.5;
    }
    return out;
}

}  // namespace

double spearman_rank_correlation(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw InvalidParameter("correlation inputs must have equal length");
    }
    if (a.size() < 3) {
        throw InsufficientData("rank correlation needs at least three records");
    }
    const auto ra = ranks(a);
    const auto rb = ranks(b);
    const double n = static_cast<double>(a.size());
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        mean_a += ra[i];
        mean_b += rb[i];
    }
    mean_a /= n;
    mean_b /= n;
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        const double da = ra[i] - mean_a;
        const double db = rb[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0) return 0.0;  // degenerate ranks
    return cov / std::sqrt(var_a * var_b);
}

double tid_performance_correlation(const std::vector<PerformanceRecord>& records) {
    std::vector<double> tids, throughputs;
    tids.reserve(records.size());
    throughputs.reserve(records.size());
    for (const auto& r : records) {
        tids.push_back(r.tid);
        throughputs.push_back(r.throughput_mbps);
    }
    return spearman_rank_correlation(tids, throughputs);
}

}  // namespace wmn::evalsim
