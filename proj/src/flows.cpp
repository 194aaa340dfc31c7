#include "wmn/flows.hpp"

#include <algorithm>

namespace wmn::evalsim {

FlowSpec::FlowSpec(NodeId s, NodeId d, std::string l) : src(s), dst(d), label(std::move(l)) {
    if (src == dst) {
        throw InvalidParameter("flow source and destination must differ: " + label);
    }
}

namespace {

NodeId grid_id(int row, int col, int cols) {
    return row * cols + col + 1;  // row-major, 1-based
}

// One-hop flows between alternate node pairs in every row (left-to-right
// sources) or every column (bottom-up sources).
std::vector<FlowSpec> one_hop_horizontal(int rows, int cols) {
    std::vector<FlowSpec> flows;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c + 1 < cols; c += 2) {
            flows.emplace_back(grid_id(r, c, cols), grid_id(r, c + 1, cols),
                               "1-HHF-R" + std::to_string(r + 1) + "-" +
                                   std::to_string(c / 2 + 1));
        }
    }
    return flows;
}

std::vector<FlowSpec> one_hop_vertical(int rows, int cols) {
    std::vector<FlowSpec> flows;
    for (int c = 0; c < cols; ++c) {
        int pair = 1;
        for (int r = rows - 1; r - 1 >= 0; r -= 2) {
            flows.emplace_back(grid_id(r, c, cols), grid_id(r - 1, c, cols),
                               "1-HVF-C" + std::to_string(c + 1) + "-" +
                                   std::to_string(pair++));
        }
    }
    return flows;
}

FlowSpec row_flow(int row, int cols) {
    return FlowSpec(grid_id(row, 0, cols), grid_id(row, cols - 1, cols),
                    "4-HHF-R" + std::to_string(row + 1));
}

FlowSpec col_flow(int col, int rows, int cols) {
    return FlowSpec(grid_id(0, col, cols), grid_id(rows - 1, col, cols),
                    "4-HVF-C" + std::to_string(col + 1));
}

std::vector<FlowSpec> diagonal_flows(int rows, int cols) {
    return {FlowSpec(grid_id(0, 0, cols), grid_id(rows - 1, cols - 1, cols), "8-HDF-1"),
            FlowSpec(grid_id(rows - 1, 0, cols), grid_id(0, cols - 1, cols), "8-HDF-2")};
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

}  // namespace

FlowSuite flow_suite(int rows, int cols, int test_class, int case_index) {
    if (rows < 1 || cols < 1) {
        throw InvalidParameter("flow suite needs a non-empty grid");
    }
    FlowSuite suite;
    suite.test_class = test_class;

    switch (test_class) {
        case 1: {
            std::vector<FlowSpec> flows;
            switch (case_index) {
                case 1:
                    suite.case_name = "1-HVF";
                    flows = one_hop_vertical(rows, cols);
                    break;
                case 2:
                    suite.case_name = "1-HHF";
                    flows = one_hop_horizontal(rows, cols);
                    break;
                case 3: {
                    suite.case_name = "1-HHF+1-HVF";
                    flows = one_hop_horizontal(rows, cols);
                    auto vert = one_hop_vertical(rows, cols);
                    flows.insert(flows.end(), vert.begin(), vert.end());
                    break;
                }
                default:
                    throw UnknownCase("class 1 has cases 1..3");
            }
            suite.combinations.push_back(std::move(flows));
            return suite;
        }
        case 2: {
            if (case_index < 1 || case_index > rows) {
                throw UnknownCase("class 2 case must be in 1.." + std::to_string(rows));
            }
            if (cols < 2) {
                throw UnknownCase("class 2 needs at least two columns");
            }
            suite.case_name = "FT-" + std::to_string(case_index);
            for (const auto& pick : combinations(rows, case_index)) {
                std::vector<FlowSpec> flows;
                for (int r : pick) flows.push_back(row_flow(r, cols));
                suite.combinations.push_back(std::move(flows));
            }
            return suite;
        }
        case 3: {
            switch (case_index) {
                case 1: {
                    if (rows < 2 || cols < 2) throw UnknownCase("D2 needs a 2x2 grid or larger");
                    suite.case_name = "D2";
                    suite.combinations.push_back(diagonal_flows(rows, cols));
                    return suite;
                }
                case 2: {
                    if (rows < 4 || cols < 4) throw UnknownCase("H4V4 needs a 4x4 grid or larger");
                    suite.case_name = "H4V4";
                    // Sliding contiguous blocks of four rows and four columns.
                    for (int r0 = 0; r0 + 4 <= rows; ++r0) {
                        for (int c0 = 0; c0 + 4 <= cols; ++c0) {
                            std::vector<FlowSpec> flows;
                            for (int r = r0; r < r0 + 4; ++r) flows.push_back(row_flow(r, cols));
                            for (int c = c0; c < c0 + 4; ++c) {
                                flows.push_back(col_flow(c, rows, cols));
                            }
                            suite.combinations.push_back(std::move(flows));
                        }
                    }
                    return suite;
                }
                case 3: {
                    if (cols < 2 || rows < 2) throw UnknownCase("H5V5 needs a 2x2 grid or larger");
                    suite.case_name = "H5V5";
                    std::vector<FlowSpec> flows;
                    for (int r = 0; r < rows; ++r) flows.push_back(row_flow(r, cols));
                    for (int c = 0; c < cols; ++c) flows.push_back(col_flow(c, rows, cols));
                    suite.combinations.push_back(std::move(flows));
                    return suite;
                }
                case 4: {
                    if (cols < 2 || rows < 2) throw UnknownCase("H5V5D2 needs a 2x2 grid or larger");
                    suite.case_name = "H5V5D2";
                    std::vector<FlowSpec> flows;
                    for (int r = 0; r < rows; ++r) flows.push_back(row_flow(r, cols));
                    for (int c = 0; c < cols; ++c) flows.push_back(col_flow(c, rows, cols));
                    auto diag = diagonal_flows(rows, cols);
                    flows.insert(flows.end(), diag.begin(), diag.end());
                    suite.combinations.push_back(std::move(flows));
                    return suite;
                }
                default:
                    throw UnknownCase("class 3 has cases 1..4 (D2, H4V4, H5V5, H5V5D2)");
            }
        }
        default:
            throw UnknownCase("test class must be 1, 2 or 3");
    }
}

int parse_case(int test_class, const std::string& text) {
    if (test_class == 3) {
        if (text == "D2") return 1;
        if (text == "H4V4") return 2;
        if (text == "H5V5") return 3;
        if (text == "H5V5D2") return 4;
    }
    try {
        return std::stoi(text);
    } catch (const std::exception&) {
        throw UnknownCase("unrecognized case '" + text + "' for class " +
                          std::to_string(test_class));
    }
}

}  // namespace wmn::evalsim
