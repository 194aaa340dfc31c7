#include "wmn/topology_io.hpp"

#include <fstream>

#include "json.hpp"

namespace wmn {

using nlohmann::json;

std::string topology_to_json(const WmnGraph& g) {
    json out;
    out["tx_range_m"] = g.tx_range();
    json nodes = json::array();
    for (const Node& n : g.nodes()) {
        nodes.push_back({{"id", n.id}, {"x_m", n.x}, {"y_m", n.y}, {"radios", n.radios}});
    }
    out["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    out["edges"] = std::move(edges);
    return out.dump(2) + "\n";
}

WmnGraph topology_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidTopology(std::string("topology is not valid JSON: ") + e.what());
    }
    if (!in.contains("tx_range_m") || !in.contains("nodes")) {
        throw InvalidTopology("topology requires tx_range_m and nodes");
    }
    const double range = in.at("tx_range_m").get<double>();
    std::vector<Node> nodes;
    for (const auto& jn : in.at("nodes")) {
        Node n;
        n.id = jn.at("id").get<NodeId>();
        n.x = jn.at("x_m").get<double>();
        n.y = jn.at("y_m").get<double>();
        n.radios = jn.value("radios", 1);
        nodes.push_back(n);
    }

    std::vector<NodeEdge> edges;
    if (in.contains("edges")) {
        for (const auto& je : in.at("edges")) {
            if (!je.is_array() || je.size() != 2) {
                throw InvalidTopology("edges must be [node, node] pairs");
            }
            edges.emplace_back(je.at(0).get<NodeId>(), je.at(1).get<NodeId>());
        }
    } else {
        // Derive edges from range.
        const double range_sq = range * range;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                const double dx = nodes[i].x - nodes[j].x;
                const double dy = nodes[i].y - nodes[j].y;
                if (dx * dx + dy * dy <= range_sq) {
                    edges.emplace_back(nodes[i].id, nodes[j].id);
                }
            }
        }
    }
    return WmnGraph(std::move(nodes), std::move(edges), range);
}

void save_topology(const WmnGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write topology file " + path.string());
    }
    out << topology_to_json(g);
}

WmnGraph load_topology(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot read topology file " + path.string());
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return topology_from_json(text);
}

}  // namespace wmn
