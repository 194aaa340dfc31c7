#include "wmn/mmcg_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wmn::mmcg {

using nlohmann::json;

std::string conflict_graph_to_json(const ConflictGraph& cg) {
    json out;
    out["variant"] = to_string(cg.variant());
    json verts = json::array();
    for (const RadioLink& l : cg.vertices()) {
        verts.push_back({{l.a.node, l.a.radio}, {l.b.node, l.b.radio}});
    }
    out["vertices"] = std::move(verts);
    json edges = json::array();
    for (const auto& [u, v] : cg.edges()) {
        edges.push_back({u, v});
    }
    out["edges"] = std::move(edges);
    out["tid"] = cg.tid();
    return out.dump(2) + "\n";
}

void save_conflict_graph(const ConflictGraph& cg, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write conflict-graph file " + path.string());
    }
    out << conflict_graph_to_json(cg);
}

std::string degrees_to_csv(const ConflictGraph& cg) {
    std::ostringstream out;
    out << "a_node,a_radio,b_node,b_radio,degree\n";
    for (std::size_t i = 0; i < cg.vertices().size(); ++i) {
        const RadioLink& l = cg.vertices()[i];
        out << l.a.node << ',' << l.a.radio << ',' << l.b.node << ',' << l.b.radio << ','
            << cg.degree(static_cast<int>(i)) << '\n';
    }
    return out.str();
}

void save_degrees_csv(const ConflictGraph& cg, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write degree file " + path.string());
    }
    out << degrees_to_csv(cg);
}

}  // namespace wmn::mmcg
