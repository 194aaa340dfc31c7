#include "wmn/ca_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wmn::ca {

using nlohmann::json;

std::string assignment_to_csv(const ChannelAssignment& ca) {
    std::ostringstream out;
    out << "node_id,radio_index,channel\n";
    for (const auto& [radio, chan] : ca.radio_channels()) {  // map is (node, radio) sorted
        out << radio.node << ',' << radio.radio << ',' << chan << '\n';
    }
    return out.str();
}

void save_assignment(const ChannelAssignment& ca, const std::filesystem::path& csv_path,
                     const std::string& variant_context, const std::string& config_hash) {
    std::ofstream out(csv_path);
    if (!out) {
        throw Error("cannot write assignment file " + csv_path.string());
    }
    out << assignment_to_csv(ca);
    out.close();

    json meta;
    meta["scheme"] = ca.scheme();
    if (ca.seed()) {
        meta["seed"] = *ca.seed();
    } else {
        meta["seed"] = nullptr;
    }
    meta["channels"] = ca.channel_set();
    if (!variant_context.empty()) meta["variant"] = variant_context;
    if (!config_hash.empty()) meta["config_hash"] = config_hash;
    std::ofstream side(csv_path.string() + ".meta.json");
    if (!side) {
        throw Error("cannot write assignment sidecar for " + csv_path.string());
    }
    side << meta.dump(2) << '\n';
}

ChannelAssignment load_assignment(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) {
        throw Error("cannot read assignment file " + csv_path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw Error("assignment file is empty: " + csv_path.string());
    }
    std::map<RadioId, mmcg::ChannelId> map;
    std::vector<mmcg::ChannelId> channels;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        RadioId r;
        mmcg::ChannelId chan;
        std::getline(row, field, ',');
        r.node = std::stoi(field);
        std::getline(row, field, ',');
        r.radio = std::stoi(field);
        std::getline(row, field, ',');
        chan = std::stoi(field);
        map[r] = chan;
        if (std::find(channels.begin(), channels.end(), chan) == channels.end()) {
            channels.push_back(chan);
        }
    }
    std::sort(channels.begin(), channels.end());

    std::string scheme = "file";
    std::optional<std::uint64_t> seed;
    const std::filesystem::path side_path = csv_path.string() + ".meta.json";
    if (std::filesystem::exists(side_path)) {
        std::ifstream side(side_path);
        json meta = json::parse(side, nullptr, false);
        if (!meta.is_discarded()) {
            scheme = meta.value("scheme", scheme);
            if (meta.contains("seed") && meta["seed"].is_number_unsigned()) {
                seed = meta["seed"].get<std::uint64_t>();
            }
            if (meta.contains("channels")) {
                channels = meta["channels"].get<std::vector<mmcg::ChannelId>>();
            }
        }
    }
    return ChannelAssignment(std::move(map), std::move(channels), scheme, seed);
}

}  // namespace wmn::ca
