#pragma once

#include <map>

#include "wmn/core.hpp"
#include "wmn/mmcg.hpp"

// Shared topologies: the four-node diamond with co-located radio pairs at the
// outer nodes, and the three-node chain in its single-radio-center,
// multi-radio and channel-separated configurations.
namespace testsupport {

inline constexpr wmn::NodeId kNodeA = 1;
inline constexpr wmn::NodeId kNodeB = 2;
inline constexpr wmn::NodeId kNodeC = 3;
inline constexpr wmn::NodeId kNodeD = 4;

/// A(2 radios) top, B(1) right, C(1) left, D(2) bottom; edges A-B, A-C, B-D,
/// C-D. Every edge is 200*sqrt(2) long, inside the 300 m range; the two
/// diagonals sit at 400 m.
wmn::WmnGraph diamond_topology();

/// Nodes A, B, C on a line at 200 m spacing, 250 m range.
wmn::WmnGraph chain_topology(int radios_a, int radios_b, int radios_c);

/// Single-radio-center chain: A2 and B1 and C1 share channel 1, the unused
/// outer radios park on channel 2. Two operational links.
struct ChainScenario {
    wmn::WmnGraph graph;
    std::map<wmn::RadioId, int> radio_channels;
    std::vector<int> channel_set;
};

ChainScenario chain_single_radio_center();   // one conflicting pair
ChainScenario chain_common_channel();        // K4 of operational links
ChainScenario chain_channel_separated();     // zero conflicts

wmn::mmcg::ChannelAssignment chain_assignment(const ChainScenario& s);

}  // namespace testsupport
