#pragma once

#include <cstddef>
#include <vector>

#include "wmn/ca.hpp"
#include "wmn/flows.hpp"
#include "wmn/mmcg.hpp"

namespace wmn::evalsim {

using ca::ChannelAssignment;
using mmcg::ConflictGraph;
using mmcg::RadioGraph;

struct RoutedFlow {
    FlowSpec flow;
    std::vector<NodeId> node_path;     // src first, dst last
    std::vector<RadioLink> link_path;  // one link per hop
};

/// Shortest-hop routing over operational node-level links, lexicographically
/// smallest path on ties. Each hop is carried by the operational radio link
/// with the smallest conflict degree in `cg` (ties in canonical link order).
std::vector<RoutedFlow> route(const WmnGraph& g, const ChannelAssignment& ca,
                              const ConflictGraph& cg, const std::vector<FlowSpec>& flows);

struct ScheduleOptions {
    double phy_rate_mbps = 9.0;
    std::size_t max_active_links = 512;    // guard before clique enumeration
    std::size_t max_cliques = 200000;      // guard during clique enumeration
};

struct ScheduleResult {
    std::vector<RoutedFlow> routed;
    std::vector<double> per_flow_mbps;  // parallel to routed
    double aggregate_mbps = 0.0;
    // Airtime fraction of each active link, indexed like active_links.
    std::vector<RadioLink> active_links;
    std::vector<double> link_airtime;
};

/// Max-min fair fluid TDMA over the conflict graph restricted to the links the
/// routed flows use: all flows rise in lockstep, a flow freezes when any
/// maximal clique of mutually conflicting links it crosses saturates.
ScheduleResult schedule(const ConflictGraph& cg, const std::vector<RoutedFlow>& flows,
                        const ScheduleOptions& options = {});

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, the list
/// sorted lexicographically. Throws BudgetExceeded past `max_cliques`.
std::vector<std::vector<int>> enumerate_maximal_cliques(
    const std::vector<std::vector<int>>& adjacency, std::size_t max_cliques);

/// Core fluid allocator, exposed for property tests: returns one rate per
/// flow given the maximal cliques of the active-link conflict graph and each
/// flow's link set.
std::vector<double> maxmin_fair_rates(const std::vector<std::vector<int>>& cliques,
                                      const std::vector<std::vector<int>>& flow_links,
                                      double phy_rate_mbps);

struct CaseResult {
    int test_class = 0;
    std::string case_name;
    double mean_aggregate_mbps = 0.0;       // arithmetic mean over combinations
    std::vector<ScheduleResult> runs;       // one per combination
};

/// Routes and schedules every combination of the selected test case. The
/// conflict graph used for scheduling is always the enhanced one: co-location
/// interference is physical no matter which variant informed the assignment.
CaseResult evaluate(const WmnGraph& g, const ChannelAssignment& ca,
                    const ConflictPredicate& model, int test_class, int case_index,
                    const ScheduleOptions& options = {});

}  // namespace wmn::evalsim
