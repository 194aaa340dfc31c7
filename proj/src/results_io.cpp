#include "wmn/results_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wmn::evalsim {

using nlohmann::json;

std::string per_flow_json(const CaseResult& result) {
    json runs = json::array();
    for (const ScheduleResult& run : result.runs) {
        json flows = json::array();
        for (std::size_t f = 0; f < run.routed.size(); ++f) {
            flows.push_back({{"label", run.routed[f].flow.label},
                             {"mbps", run.per_flow_mbps[f]}});
        }
        runs.push_back({{"aggregate_mbps", run.aggregate_mbps}, {"flows", std::move(flows)}});
    }
    return runs.dump();
}

namespace {

// RFC-4180 quoting: the per-flow JSON blob carries commas and quotes.
std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::vector<std::string> parse_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

std::string results_to_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << "scheme,variant,seed,class,case,aggregate_mbps,per_flow\n";
    for (const ResultRow& r : rows) {
        std::ostringstream agg;
        agg << r.aggregate_mbps;
        out << r.scheme << ',' << r.variant << ',' << r.seed << ',' << r.test_class << ','
            << r.case_name << ',' << agg.str() << ',' << csv_field(r.per_flow_json) << '\n';
    }
    return out.str();
}

void save_results_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write results file " + path.string());
    }
    out << results_to_csv(rows);
}

std::vector<ResultRow> load_results_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot read results file " + path.string());
    }
    std::string line;
    std::getline(in, line);  // header
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = parse_csv_line(line);
        if (fields.size() != 7) {
            throw Error("malformed results row in " + path.string());
        }
        ResultRow r;
        r.scheme = fields[0];
        r.variant = fields[1];
        r.seed = std::stoull(fields[2]);
        r.test_class = std::stoi(fields[3]);
        r.case_name = fields[4];
        r.aggregate_mbps = std::stod(fields[5]);
        r.per_flow_json = fields[6];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string correlation_report_json(const std::vector<PerformanceRecord>& records,
                                    double rho) {
    json out;
    out["spearman_rho"] = rho;
    out["n"] = records.size();
    json recs = json::array();
    for (const auto& r : records) {
        recs.push_back({{"scheme", r.scheme}, {"tid", r.tid},
                        {"throughput_mbps", r.throughput_mbps}});
    }
    out["records"] = std::move(recs);
    return out.dump(2) + "\n";
}

}  // namespace wmn::evalsim
