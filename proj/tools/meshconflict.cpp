// meshconflict: experiment runner binding the pipeline
//   topology -> conflict graphs -> channel assignment -> flow evaluation.
//
// Exit codes: 0 success, 2 usage error, 3 validation error, 4 budget exceeded.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wmn/ca.hpp"
#include "wmn/ca_io.hpp"
#include "wmn/correlation.hpp"
#include "wmn/flows.hpp"
#include "wmn/mmcg.hpp"
#include "wmn/mmcg_io.hpp"
#include "wmn/results_io.hpp"
#include "wmn/rng.hpp"
#include "wmn/schedule.hpp"
#include "wmn/topology_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

// Writes via a temp file so partially written outputs never appear.
void write_file_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw wmn::Error("cannot write " + path.string());
        out << content;
    }
    fs::rename(tmp, path);
}

// Stores the resolved command config next to the output and returns its hash.
std::string write_config_sidecar(const fs::path& primary_output, json config) {
    const std::string hash = fnv1a_hex(config.dump());
    config["config_hash"] = hash;
    write_file_atomic(primary_output.string() + ".config.json", config.dump(2) + "\n");
    return hash;
}

std::pair<int, int> parse_grid_spec(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos) {
        throw wmn::InvalidParameter("grid must look like ROWSxCOLS, e.g. 5x5");
    }
    try {
        return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
    } catch (const std::exception&) {
        throw wmn::InvalidParameter("grid must look like ROWSxCOLS, e.g. 5x5");
    }
}

// Seed specs: "7", "1..30", or comma-separated mixes of both.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        const auto dots = part.find("..");
        try {
            if (dots == std::string::npos) {
                seeds.push_back(std::stoull(part));
            } else {
                const std::uint64_t lo = std::stoull(part.substr(0, dots));
                const std::uint64_t hi = std::stoull(part.substr(dots + 2));
                if (hi < lo) throw wmn::InvalidParameter("seed range is inverted: " + part);
                for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
            }
        } catch (const std::invalid_argument&) {
            throw wmn::InvalidParameter("bad seed spec: " + part);
        } catch (const std::out_of_range&) {
            throw wmn::InvalidParameter("seed out of range: " + part);
        }
    }
    if (seeds.empty()) throw wmn::InvalidParameter("no seeds given");
    return seeds;
}

std::vector<wmn::mmcg::ChannelId> make_channel_set(int count) {
    if (count < 1) throw wmn::InvalidParameter("need at least one channel");
    std::vector<wmn::mmcg::ChannelId> channels(count);
    for (int i = 0; i < count; ++i) channels[i] = i + 1;
    return channels;
}

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("MESHCONFLICT_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
            throw wmn::InvalidParameter("MESHCONFLICT_THREADS must be a positive integer");
        }
    }
    return n;
}

struct SchemeRequest {
    std::string name;  // bfs | mais | cen | clq
    wmn::mmcg::Variant variant;
};

wmn::ca::ChannelAssignment run_scheme(const SchemeRequest& req, const wmn::mmcg::RadioGraph& rg,
                                      const wmn::mmcg::ConflictGraph& default_mmcg,
                                      const wmn::ProtocolModel& model,
                                      const wmn::ca::CaConfig& cfg) {
    if (req.name == "bfs") return wmn::ca::bfs_ca(rg, default_mmcg, cfg);
    if (req.name == "mais") return wmn::ca::mais_ca(rg, default_mmcg, cfg);
    if (req.name == "cen") return wmn::ca::cen_ca(rg, cfg, model, req.variant);
    if (req.name == "clq") return wmn::ca::clq_ca(rg, default_mmcg, cfg);
    throw wmn::InvalidParameter("unknown scheme '" + req.name +
                                "' (expected bfs, mais, cen or clq)");
}

void check_scheme_names(const std::vector<std::string>& schemes) {
    if (schemes.empty()) throw wmn::InvalidParameter("at least one scheme is required");
    for (const auto& s : schemes) {
        if (s != "bfs" && s != "mais" && s != "cen" && s != "clq") {
            throw wmn::InvalidParameter("unknown scheme '" + s + "'");
        }
    }
}

// ---------------------------------------------------------------- gen -----

int cmd_gen(const std::string& grid, double spacing, int radios, double range,
            const std::string& out) {
    const auto [rows, cols] = parse_grid_spec(grid);
    wmn::WmnGraph g = wmn::build_grid(rows, cols, spacing, radios, range);

    json config = {{"command", "gen"}, {"grid", grid},       {"spacing_m", spacing},
                   {"radios", radios}, {"tx_range_m", range}, {"out", out}};
    write_config_sidecar(out, config);
    write_file_atomic(out, wmn::topology_to_json(g));
    std::cout << g.nodes().size() << " nodes, " << g.edges().size() << " edges -> " << out
              << "\n";
    return 0;
}

// --------------------------------------------------------------- mmcg -----

int cmd_mmcg(const std::string& topology, const std::string& variant_name, double delta,
             const std::string& assignment, int channels, const std::string& out,
             const std::string& degrees) {
    const wmn::WmnGraph g = wmn::load_topology(topology);
    const wmn::mmcg::RadioGraph rg = wmn::mmcg::expand(g);
    const auto variant = wmn::mmcg::variant_from_string(variant_name);
    const wmn::ProtocolModel model({delta, g.tx_range()});

    const wmn::ca::ChannelAssignment ca =
        assignment.empty()
            ? wmn::mmcg::ChannelAssignment::all_default(rg, make_channel_set(channels))
            : wmn::ca::load_assignment(assignment);
    const auto cg = wmn::mmcg::build_mmcg(rg, ca, model, variant);

    if (!out.empty()) {
        json config = {{"command", "mmcg"},   {"topology", topology}, {"variant", variant_name},
                       {"delta", delta},      {"assignment", assignment},
                       {"channels", channels}, {"out", out}};
        const std::string hash = write_config_sidecar(out, config);
        json body = json::parse(wmn::mmcg::conflict_graph_to_json(cg));
        body["config_hash"] = hash;
        write_file_atomic(out, body.dump(2) + "\n");
    }
    if (!degrees.empty()) {
        write_file_atomic(degrees, wmn::mmcg::degrees_to_csv(cg));
    }
    std::cout << cg.tid() << "\n";
    return 0;
}

// -------------------------------------------------------------- sweep -----

int cmd_sweep(int n_max, double spacing, int radios, double range, double delta,
              const std::string& out) {
    if (n_max < 1) throw wmn::InvalidParameter("sweep needs --n-max >= 1");
    std::ostringstream csv;
    csv << "n,nodes,tid_classical,tid_enhanced,gap\n";
    for (int n = 1; n <= n_max; ++n) {
        const int side = 5 * n;
        const wmn::WmnGraph g = wmn::build_grid(side, side, spacing, radios, range);
        const auto rg = wmn::mmcg::expand(g);
        const auto ca = wmn::mmcg::ChannelAssignment::all_default(rg);
        const wmn::ProtocolModel model({delta, range});
        const std::size_t tid_c = wmn::mmcg::build_cmmcg(rg, ca, model).tid();
        const std::size_t tid_e = wmn::mmcg::build_emmcg(rg, ca, model).tid();
        csv << n << ',' << side * side << ',' << tid_c << ',' << tid_e << ','
            << (tid_e - tid_c) << '\n';
        std::cerr << "sweep " << side << "x" << side << ": classical " << tid_c
                  << ", enhanced " << tid_e << "\n";
    }
    json config = {{"command", "sweep"}, {"n_max", n_max},   {"spacing_m", spacing},
                   {"radios", radios},   {"tx_range_m", range}, {"delta", delta},
                   {"out", out}};
    write_config_sidecar(out, config);
    write_file_atomic(out, csv.str());
    return 0;
}

// ------------------------------------------------------------- assign -----

int cmd_assign(const std::string& topology, std::vector<std::string> schemes,
               std::vector<std::string> variants, int channels, std::uint64_t seed,
               std::optional<wmn::NodeId> gateway, double delta, const std::string& out_dir,
               const std::string& report) {
    check_scheme_names(schemes);
    if (variants.empty()) throw wmn::InvalidParameter("at least one variant is required");
    const bool wants_bfs = std::find(schemes.begin(), schemes.end(), "bfs") != schemes.end();
    if (wants_bfs && !gateway) {
        throw wmn::GatewayMissing("scheme bfs requires --gateway");
    }

    const wmn::WmnGraph g = wmn::load_topology(topology);
    const auto rg = wmn::mmcg::expand(g);
    const wmn::ProtocolModel model({delta, g.tx_range()});
    const auto default_ca =
        wmn::mmcg::ChannelAssignment::all_default(rg, make_channel_set(channels));

    fs::create_directories(out_dir);
    json config = {{"command", "assign"}, {"topology", topology}, {"schemes", schemes},
                   {"variants", variants}, {"channels", channels}, {"seed", seed},
                   {"delta", delta},       {"out_dir", out_dir}};
    if (gateway) config["gateway"] = *gateway;
    const std::string hash = write_config_sidecar(fs::path(out_dir) / "assign", config);

    std::ostringstream report_csv;
    report_csv << "scheme,variant,tid\n";
    for (const std::string& variant_name : variants) {
        const auto variant = wmn::mmcg::variant_from_string(variant_name);
        const auto default_mmcg = wmn::mmcg::build_mmcg(rg, default_ca, model, variant);
        for (const std::string& scheme : schemes) {
            wmn::ca::CaConfig cfg;
            cfg.channels = make_channel_set(channels);
            cfg.gateway = gateway;
            cfg.seed = wmn::derive_stream_seed(seed, scheme);
            const auto ca = run_scheme({scheme, variant}, rg, default_mmcg, model, cfg);
            const auto result_mmcg = wmn::mmcg::build_mmcg(rg, ca, model, variant);

            const fs::path csv_path = fs::path(out_dir) / ("assign-" + scheme + "-" +
                                                            variant_name + "-seed" +
                                                            std::to_string(seed) + ".csv");
            wmn::ca::save_assignment(ca, csv_path, variant_name, hash);
            report_csv << scheme << ',' << variant_name << ',' << result_mmcg.tid() << '\n';
            std::cout << scheme << " " << variant_name << " tid=" << result_mmcg.tid()
                      << " -> " << csv_path.string() << "\n";
        }
    }
    if (!report.empty()) {
        write_file_atomic(report, report_csv.str());
    }
    return 0;
}

// ----------------------------------------------------------- evaluate -----

struct EvalJob {
    std::string scheme;
    std::string variant_name;
    std::uint64_t seed = 0;
};

int cmd_evaluate(const std::string& topology, std::vector<std::string> schemes,
                 std::vector<std::string> variants, const std::string& seed_spec,
                 int test_class, const std::string& case_text, int channels,
                 std::optional<wmn::NodeId> gateway, double delta, double phy_rate,
                 std::size_t clique_budget, const std::string& out_dir, bool correlate) {
    check_scheme_names(schemes);
    if (variants.empty()) throw wmn::InvalidParameter("at least one variant is required");
    const bool wants_bfs = std::find(schemes.begin(), schemes.end(), "bfs") != schemes.end();
    if (wants_bfs && !gateway) {
        throw wmn::GatewayMissing("scheme bfs requires --gateway");
    }
    const auto seeds = parse_seeds(seed_spec);
    const int case_index = wmn::evalsim::parse_case(test_class, case_text);

    const wmn::WmnGraph g = wmn::load_topology(topology);
    const auto rg = wmn::mmcg::expand(g);
    const wmn::ProtocolModel model({delta, g.tx_range()});
    const auto default_ca =
        wmn::mmcg::ChannelAssignment::all_default(rg, make_channel_set(channels));
    const auto default_classical =
        wmn::mmcg::build_cmmcg(rg, default_ca, model);
    const auto default_enhanced = wmn::mmcg::build_emmcg(rg, default_ca, model);

    std::vector<EvalJob> jobs;
    for (const auto& scheme : schemes) {
        for (const auto& variant : variants) {
            for (std::uint64_t s : seeds) jobs.push_back({scheme, variant, s});
        }
    }

    wmn::evalsim::ScheduleOptions options;
    options.phy_rate_mbps = phy_rate;
    options.max_cliques = clique_budget;

    std::vector<wmn::evalsim::ResultRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size() || failed.load()) return;
            try {
                const EvalJob& job = jobs[i];
                const auto variant = wmn::mmcg::variant_from_string(job.variant_name);
                const auto& default_mmcg = variant == wmn::mmcg::Variant::classical
                                               ? default_classical
                                               : default_enhanced;
                wmn::ca::CaConfig cfg;
                cfg.channels = make_channel_set(channels);
                cfg.gateway = gateway;
                cfg.seed = wmn::derive_stream_seed(job.seed, job.scheme);
                const auto ca = run_scheme({job.scheme, variant}, rg, default_mmcg, model, cfg);
                const auto result =
                    wmn::evalsim::evaluate(g, ca, model, test_class, case_index, options);
                rows[i] = {job.scheme,        job.variant_name,
                           job.seed,          test_class,
                           result.case_name,  result.mean_aggregate_mbps,
                           wmn::evalsim::per_flow_json(result)};
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned workers = std::min<unsigned>(worker_count(), jobs.size());
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(failure);

    fs::create_directories(out_dir);
    const std::string case_name = rows.empty() ? case_text : rows.front().case_name;
    const fs::path results_path =
        fs::path(out_dir) / ("results-c" + std::to_string(test_class) + "-" + case_name +
                             ".csv");
    json config = {{"command", "evaluate"}, {"topology", topology},  {"schemes", schemes},
                   {"variants", variants},  {"seeds", seed_spec},    {"class", test_class},
                   {"case", case_text},     {"channels", channels},  {"delta", delta},
                   {"phy_rate_mbps", phy_rate}, {"clique_budget", clique_budget},
                   {"out_dir", out_dir}};
    if (gateway) config["gateway"] = *gateway;
    write_config_sidecar(results_path, config);
    wmn::evalsim::save_results_csv(rows, results_path);
    std::cout << "wrote " << rows.size() << " rows -> " << results_path.string() << "\n";

    if (correlate) {
        // Correlate the enhanced-graph TID of every (scheme, variant, seed)
        // assignment in the output directory against its mean throughput.
        std::vector<wmn::evalsim::ResultRow> all;
        for (const auto& entry : fs::directory_iterator(out_dir)) {
            const std::string name = entry.path().filename().string();
            if (name.rfind("results-", 0) == 0 && entry.path().extension() == ".csv") {
                auto batch = wmn::evalsim::load_results_csv(entry.path());
                all.insert(all.end(), batch.begin(), batch.end());
            }
        }
        std::map<std::tuple<std::string, std::string, std::uint64_t>,
                 std::pair<double, int>>
            grouped;
        for (const auto& row : all) {
            auto& acc = grouped[{row.scheme, row.variant, row.seed}];
            acc.first += row.aggregate_mbps;
            acc.second += 1;
        }
        std::vector<wmn::evalsim::PerformanceRecord> records;
        for (const auto& [key, acc] : grouped) {
            const auto& [scheme, variant_name, seed] = key;
            const auto variant = wmn::mmcg::variant_from_string(variant_name);
            const auto& default_mmcg = variant == wmn::mmcg::Variant::classical
                                           ? default_classical
                                           : default_enhanced;
            wmn::ca::CaConfig cfg;
            cfg.channels = make_channel_set(channels);
            cfg.gateway = gateway;
            cfg.seed = wmn::derive_stream_seed(seed, scheme);
            const auto ca = run_scheme({scheme, variant}, rg, default_mmcg, model, cfg);
            const double tid =
                static_cast<double>(wmn::mmcg::build_emmcg(rg, ca, model).tid());
            records.push_back({scheme + "-" + variant_name + "-seed" + std::to_string(seed),
                               tid, acc.first / acc.second});
        }
        const double rho = wmn::evalsim::tid_performance_correlation(records);
        const fs::path report_path = fs::path(out_dir) / "correlation.json";
        write_file_atomic(report_path,
                          wmn::evalsim::correlation_report_json(records, rho));
        std::cout << "spearman rho = " << rho << " -> " << report_path.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conflict-graph toolkit for multi-radio multi-channel wireless mesh networks"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a grid topology file");
    std::string gen_grid = "5x5", gen_out = "topology.json";
    double gen_spacing = 200.0, gen_range = 250.0;
    int gen_radios = 2;
    gen->add_option("--grid", gen_grid, "Grid shape ROWSxCOLS");
    gen->add_option("--spacing", gen_spacing, "Node spacing in meters");
    gen->add_option("--radios", gen_radios, "Radios per node");
    gen->add_option("--range", gen_range, "Transmission range in meters");
    gen->add_option("--out", gen_out, "Output topology file");

    // mmcg
    auto* mm = app.add_subcommand("mmcg", "Build a conflict graph and print its TID");
    std::string mm_topology, mm_variant = "enhanced", mm_assignment, mm_out, mm_degrees;
    double mm_delta = 1.0;
    int mm_channels = 1;
    mm->add_option("--topology", mm_topology, "Topology file")->required();
    mm->add_option("--variant", mm_variant, "classical or enhanced");
    mm->add_option("--delta", mm_delta, "Protocol-model interference margin");
    mm->add_option("--assignment", mm_assignment, "Channel assignment CSV (default: common channel)");
    mm->add_option("--channels", mm_channels, "Channel count for the default assignment");
    mm->add_option("--out", mm_out, "Conflict-graph JSON output");
    mm->add_option("--degrees", mm_degrees, "Per-vertex degree CSV output");

    // sweep
    auto* sw = app.add_subcommand("sweep", "TID comparison across grid sizes 5n x 5n");
    int sw_nmax = 10, sw_radios = 2;
    double sw_spacing = 200.0, sw_range = 250.0, sw_delta = 1.0;
    std::string sw_out = "sweep.csv";
    sw->add_option("--n-max", sw_nmax, "Largest n (grid 5n x 5n)");
    sw->add_option("--spacing", sw_spacing, "Node spacing in meters");
    sw->add_option("--radios", sw_radios, "Radios per node");
    sw->add_option("--range", sw_range, "Transmission range in meters");
    sw->add_option("--delta", sw_delta, "Protocol-model interference margin");
    sw->add_option("--out", sw_out, "Output CSV");

    // assign
    auto* as = app.add_subcommand("assign", "Run channel-assignment schemes");
    std::string as_topology, as_report, as_out_dir = ".";
    std::vector<std::string> as_schemes, as_variants{"enhanced"};
    int as_channels = 3;
    std::uint64_t as_seed = 1;
    double as_delta = 1.0;
    wmn::NodeId as_gateway = 0;
    bool as_has_gateway = false;
    as->add_option("--topology", as_topology, "Topology file")->required();
    as->add_option("--scheme", as_schemes, "Schemes: bfs, mais, cen, clq")->delimiter(',');
    as->add_option("--variant", as_variants, "Variants: classical, enhanced")->delimiter(',');
    as->add_option("--channels", as_channels, "Number of orthogonal channels");
    as->add_option("--seed", as_seed, "Root seed");
    auto* gw_opt = as->add_option("--gateway", as_gateway, "Gateway node id (bfs)");
    as->add_option("--delta", as_delta, "Protocol-model interference margin");
    as->add_option("--out-dir", as_out_dir, "Output directory");
    as->add_option("--report", as_report, "TID report CSV (scheme x variant)");

    // evaluate
    auto* ev = app.add_subcommand("evaluate", "Route and schedule a grid test case");
    std::string ev_topology, ev_seeds = "1", ev_case = "1", ev_out_dir = ".";
    std::vector<std::string> ev_schemes, ev_variants{"enhanced"};
    int ev_class = 2, ev_channels = 3;
    double ev_delta = 1.0, ev_phy = 9.0;
    std::size_t ev_clique_budget = 200000;
    wmn::NodeId ev_gateway = 0;
    bool ev_correlate = false;
    ev->add_option("--topology", ev_topology, "Topology file")->required();
    ev->add_option("--scheme", ev_schemes, "Schemes: bfs, mais, cen, clq")->delimiter(',');
    ev->add_option("--variant", ev_variants, "Variants: classical, enhanced")->delimiter(',');
    ev->add_option("--seeds", ev_seeds, "Seed spec, e.g. 7 or 1..30");
    ev->add_option("--class", ev_class, "Test case class: 1, 2 or 3");
    ev->add_option("--case", ev_case, "Case index or class-3 name (D2, H4V4, H5V5, H5V5D2)");
    ev->add_option("--channels", ev_channels, "Number of orthogonal channels");
    auto* ev_gw_opt = ev->add_option("--gateway", ev_gateway, "Gateway node id (bfs)");
    ev->add_option("--delta", ev_delta, "Protocol-model interference margin");
    ev->add_option("--phy-rate", ev_phy, "PHY data rate in Mbps");
    ev->add_option("--clique-budget", ev_clique_budget,
                   "Abort if clique enumeration exceeds this many cliques");
    ev->add_option("--out-dir", ev_out_dir, "Output directory");
    ev->add_flag("--correlate", ev_correlate, "Write a TID/throughput rank-correlation report");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) {
            return cmd_gen(gen_grid, gen_spacing, gen_radios, gen_range, gen_out);
        }
        if (mm->parsed()) {
            return cmd_mmcg(mm_topology, mm_variant, mm_delta, mm_assignment, mm_channels,
                            mm_out, mm_degrees);
        }
        if (sw->parsed()) {
            return cmd_sweep(sw_nmax, sw_spacing, sw_radios, sw_range, sw_delta, sw_out);
        }
        if (as->parsed()) {
            as_has_gateway = gw_opt->count() > 0;
            return cmd_assign(as_topology, as_schemes, as_variants, as_channels, as_seed,
                              as_has_gateway ? std::optional<wmn::NodeId>(as_gateway)
                                             : std::nullopt,
                              as_delta, as_out_dir, as_report);
        }
        if (ev->parsed()) {
            return cmd_evaluate(ev_topology, ev_schemes, ev_variants, ev_seeds, ev_class,
                                ev_case,
                                ev_channels,
                                ev_gw_opt->count() > 0 ? std::optional<wmn::NodeId>(ev_gateway)
                                                       : std::nullopt,
                                ev_delta, ev_phy, ev_clique_budget, ev_out_dir, ev_correlate);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const wmn::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const wmn::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wmn::GatewayMissing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wmn::UnknownCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wmn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
