#include "fixtures.hpp"

namespace testsupport {

wmn::WmnGraph diamond_topology() {
    std::vector<wmn::Node> nodes = {
        {kNodeA, 0.0, 200.0, 2},
        {kNodeB, 200.0, 0.0, 1},
        {kNodeC, -200.0, 0.0, 1},
        {kNodeD, 0.0, -200.0, 2},
    };
    std::vector<wmn::NodeEdge> edges = {
        {kNodeA, kNodeB}, {kNodeA, kNodeC}, {kNodeB, kNodeD}, {kNodeC, kNodeD}};
    return wmn::WmnGraph(std::move(nodes), std::move(edges), 300.0);
}

wmn::WmnGraph chain_topology(int radios_a, int radios_b, int radios_c) {
    std::vector<wmn::Node> nodes = {
        {kNodeA, 0.0, 0.0, radios_a},
        {kNodeB, 200.0, 0.0, radios_b},
        {kNodeC, 400.0, 0.0, radios_c},
    };
    std::vector<wmn::NodeEdge> edges = {{kNodeA, kNodeB}, {kNodeB, kNodeC}};
    return wmn::WmnGraph(std::move(nodes), std::move(edges), 250.0);
}

ChainScenario chain_single_radio_center() {
    ChainScenario s;
    s.graph = chain_topology(2, 1, 2);
    s.radio_channels = {
        {{kNodeA, 0}, 2}, {{kNodeA, 1}, 1},
        {{kNodeB, 0}, 1},
        {{kNodeC, 0}, 1}, {{kNodeC, 1}, 2},
    };
    s.channel_set = {1, 2};
    return s;
}

ChainScenario chain_common_channel() {
    ChainScenario s;
    s.graph = chain_topology(2, 2, 2);
    s.radio_channels = {
        {{kNodeA, 0}, 2}, {{kNodeA, 1}, 1},
        {{kNodeB, 0}, 1}, {{kNodeB, 1}, 1},
        {{kNodeC, 0}, 1}, {{kNodeC, 1}, 2},
    };
    s.channel_set = {1, 2};
    return s;
}

ChainScenario chain_channel_separated() {
    ChainScenario s;
    s.graph = chain_topology(2, 2, 2);
    s.radio_channels = {
        {{kNodeA, 0}, 3}, {{kNodeA, 1}, 1},
        {{kNodeB, 0}, 1}, {{kNodeB, 1}, 2},
        {{kNodeC, 0}, 2}, {{kNodeC, 1}, 3},
    };
    s.channel_set = {1, 2, 3};
    return s;
}

wmn::mmcg::ChannelAssignment chain_assignment(const ChainScenario& s) {
    return wmn::mmcg::ChannelAssignment(s.radio_channels, s.channel_set, "fixture",
                                        std::nullopt);
}

}  // namespace testsupport
