#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wmn/core.hpp"
#include "wmn/mmcg.hpp"

namespace testsupport {

/// A random connected topology with a random multi-channel assignment, for
/// property tests. Deterministic in the seed.
struct RandomScenario {
    wmn::WmnGraph graph;
    std::map<wmn::RadioId, int> radio_channels;
    std::vector<int> channel_set;
    double delta = 1.0;
};

RandomScenario random_scenario(std::uint64_t seed, int max_nodes = 12, int max_radios = 4,
                               int max_channels = 3);

wmn::mmcg::ChannelAssignment scenario_assignment(const RandomScenario& s);

}  // namespace testsupport
