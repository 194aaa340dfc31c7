#pragma once

#include <string>
#include <vector>

#include "wmn/core.hpp"

namespace wmn::evalsim {

/// One end-to-end traffic demand.
struct FlowSpec {
    NodeId src = 0;
    NodeId dst = 0;
    std::string label;

    FlowSpec() = default;
    FlowSpec(NodeId s, NodeId d, std::string l);

    bool operator==(const FlowSpec&) const = default;
};

/// A test case: one or more flow combinations. Combination families (the
/// FT-Y flow-injection sets, the sliding H4V4 blocks) carry several
/// combinations; plain cases carry exactly one.
struct FlowSuite {
    int test_class = 0;
    std::string case_name;
    std::vector<std::vector<FlowSpec>> combinations;
};

/// Grid flow factory. Nodes are numbered row-major from 1.
///   class 1 (sustenance): 1 = vertical one-hop flows, 2 = horizontal,
///                         3 = both;
///   class 2 (injection):  case Y in 1..5 = all C(rows, Y) combinations of
///                         full-row flows;
///   class 3 (stress):     1 = D2 (both diagonals), 2 = H4V4 (sliding 4x4
///                         row/column blocks), 3 = H5V5, 4 = H5V5D2.
FlowSuite flow_suite(int rows, int cols, int test_class, int case_index);

/// Maps class-3 case names (D2, H4V4, H5V5, H5V5D2) or numeric strings to the
/// case index of flow_suite.
int parse_case(int test_class, const std::string& text);

}  // namespace wmn::evalsim
