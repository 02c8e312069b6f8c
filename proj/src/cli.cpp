#include "distctl/cli.hpp"

#include "distctl/adder.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace distctl {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Collects output files and writes them together: all contents go to
// temporaries first, then every temporary is renamed into place, so a
// failing run leaves no partial outputs behind.
class StagedWriter {
public:
    void stage(std::string path, std::string content) {
        files_.emplace_back(std::move(path), std::move(content));
    }

    void commit() {
        for (std::size_t i = 0; i < files_.size(); ++i)
            for (std::size_t j = i + 1; j < files_.size(); ++j)
                if (files_[i].first == files_[j].first)
                    throw std::runtime_error("output paths must be distinct: '" + files_[i].first +
                                             "'");
        std::vector<std::string> temps;
        auto cleanup = [&] {
            for (const auto& t : temps) {
                std::error_code ec;
                std::filesystem::remove(t, ec);
            }
        };
        for (const auto& [path, content] : files_) {
            std::string tmp = path + ".tmp";
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out || !(out << content) || !out.flush()) {
                cleanup();
                throw std::runtime_error("cannot write '" + path + "'");
            }
            temps.push_back(tmp);
        }
        for (std::size_t i = 0; i < files_.size(); ++i) {
            std::error_code ec;
            std::filesystem::rename(temps[i], files_[i].first, ec);
            if (ec) {
                cleanup();
                throw std::runtime_error("cannot write '" + files_[i].first + "': " + ec.message());
            }
        }
        files_.clear();
    }

private:
    std::vector<std::pair<std::string, std::string>> files_;
};

std::optional<std::uint64_t> parse_capacity(const std::string& text) {
    if (text == "unbounded") return std::nullopt;
    std::uint64_t value = 0;
    std::size_t used = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        throw std::runtime_error("bad capacity: '" + text + "'");
    }
    if (used != text.size() || value == 0)
        throw std::runtime_error("bad capacity: '" + text + "'");
    return value;
}

} // namespace

EstimateResult run_estimate(const GateList& circuit, std::uint64_t report_n,
                            std::uint64_t capacity, const LayoutParams& params, bool bare) {
    params.validate();
    EstimateResult res;
    res.serialized = serialize_t(schedule_asap(circuit));
    const std::uint64_t tc = schedule_t_count(res.serialized);

    SimConfig uncontrolled_cfg{std::nullopt, params.dist_t, std::nullopt};
    SimConfig controlled_cfg{capacity, params.dist_t, std::nullopt};
    res.uncontrolled_trace = simulate(res.serialized, uncontrolled_cfg);
    res.controlled_trace = simulate(res.serialized, controlled_cfg);

    auto report = [&](bool controlled, const SimTrace& trace,
                      std::optional<std::uint64_t> cap) {
        ResourceReport r = build_report(report_n, tc, controlled, cap, trace.final_depth,
                                        circuit.num_qubits, max_occupancy(trace),
                                        delay_count(trace), params);
        if (bare) {
            r.width = 2 * static_cast<std::uint64_t>(params.qubits_per_row) + 2;
            r.height = qubit_rows(circuit.num_qubits, params);
            r.volume = r.depth * r.width * r.height;
        }
        return r;
    };
    res.uncontrolled = report(false, res.uncontrolled_trace, std::nullopt);
    res.controlled = report(true, res.controlled_trace, capacity);
    res.controlled.improvement = improvement(res.uncontrolled, res.controlled);
    return res;
}

namespace {

int cmd_gen_adder(std::uint32_t n, const std::string& out_path) {
    GateList list = generate_adder(n);
    std::string text;
    if (n < 8) {
        text += "# note: widths below 8 bits are outside the calibrated resource model\n";
        std::cerr << "note: n=" << n << " is outside the calibrated resource model\n";
    }
    text += serialize_gate_list(list);
    StagedWriter writer;
    writer.stage(out_path, text);
    writer.commit();
    return 0;
}

int cmd_schedule(const std::string& in_path, bool serialize, const std::string& out_path) {
    GateList list = parse_gate_list(read_file(in_path));
    Schedule s = schedule_asap(list);
    if (serialize) s = serialize_t(s);
    StagedWriter writer;
    writer.stage(out_path, serialize_schedule(s));
    writer.commit();
    return 0;
}

int cmd_simulate(const std::string& in_path, const std::string& capacity_text,
                 std::uint32_t dist_t, const std::string& trace_path,
                 const std::string& events_path, const std::string& annotated_path) {
    Schedule s = parse_schedule(read_file(in_path));
    SimConfig cfg{parse_capacity(capacity_text), dist_t, std::nullopt};
    SimTrace trace = simulate(s, cfg);
    StagedWriter writer;
    if (!trace_path.empty()) writer.stage(trace_path, trace_csv(trace));
    if (!events_path.empty()) writer.stage(events_path, events_csv(trace));
    if (!annotated_path.empty()) writer.stage(annotated_path, annotate(s, trace));
    writer.commit();
    std::cout << "final_depth " << trace.final_depth << "\n"
              << "delays " << delay_count(trace) << "\n"
              << "max_occupancy " << max_occupancy(trace) << "\n";
    return 0;
}

int cmd_estimate(const std::string& in_path, std::optional<std::uint32_t> adder_n,
                 std::uint64_t capacity, bool bare, const LayoutParams& params,
                 const std::string& report_path, const std::string& trace_dir) {
    GateList circuit;
    std::uint64_t report_n = 0;
    if (adder_n) {
        circuit = generate_adder(*adder_n);
        report_n = *adder_n;
    } else {
        circuit = parse_gate_list(read_file(in_path));
        report_n = circuit.num_qubits;
    }
    EstimateResult res = run_estimate(circuit, report_n, capacity, params, bare);

    nlohmann::ordered_json combined;
    combined["uncontrolled"] = nlohmann::ordered_json::parse(report_json(res.uncontrolled));
    combined["controlled"] = nlohmann::ordered_json::parse(report_json(res.controlled));

    StagedWriter writer;
    writer.stage(report_path, combined.dump(2) + "\n");
    if (!trace_dir.empty()) {
        std::filesystem::create_directories(trace_dir);
        auto in_dir = [&](const char* name) {
            return (std::filesystem::path(trace_dir) / name).string();
        };
        writer.stage(in_dir("uncontrolled.trace.csv"), trace_csv(res.uncontrolled_trace));
        writer.stage(in_dir("controlled.trace.csv"), trace_csv(res.controlled_trace));
        writer.stage(in_dir("uncontrolled.events.csv"), events_csv(res.uncontrolled_trace));
        writer.stage(in_dir("controlled.events.csv"), events_csv(res.controlled_trace));
        writer.stage(in_dir("uncontrolled.annotated.txt"),
                     annotate(res.serialized, res.uncontrolled_trace));
        writer.stage(in_dir("controlled.annotated.txt"),
                     annotate(res.serialized, res.controlled_trace));
    }
    writer.commit();

    auto line = [](const ResourceReport& r) {
        std::ostringstream ss;
        ss << r.mode << ": depth " << r.depth << " width " << r.width << " height " << r.height
           << " volume " << r.volume << " max_pool " << r.max_pool << " delays " << r.delays;
        return ss.str();
    };
    std::cout << "t_count " << res.controlled.t_count << "\n"
              << line(res.uncontrolled) << "\n"
              << line(res.controlled) << "\n"
              << "improvement " << *res.controlled.improvement << "\n";
    return 0;
}

int cmd_distribution(const std::string& in_path, const std::string& out_path) {
    Schedule s = parse_schedule(read_file(in_path));
    StagedWriter writer;
    writer.stage(out_path, distribution_csv(t_distribution(s)));
    writer.commit();
    return 0;
}

void add_layout_flags(CLI::App* app, LayoutParams& params) {
    app->add_option("--dist-t", params.dist_t, "time steps per distillation");
    app->add_option("--box-depth", params.box_depth, "distillation box depth, pieces");
    app->add_option("--box-width", params.box_width, "distillation box width, pieces");
    app->add_option("--box-height", params.box_height, "distillation box height, pieces");
    app->add_option("--qubits-per-row", params.qubits_per_row, "qubit line pairs per row");
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"magic-state distillery control and resource estimation"};
    app.require_subcommand(1);

    // gen-adder
    std::uint32_t adder_n = 0;
    std::string out_path;
    auto* gen = app.add_subcommand("gen-adder", "generate a benchmark adder gate list");
    gen->add_option("--n", adder_n, "adder operand width")->required()->check(CLI::Range(2u, 1u << 20));
    gen->add_option("--out", out_path, "output gate list file")->required();

    // schedule
    std::string sched_in, sched_out;
    bool serialize_flag = false;
    auto* sched = app.add_subcommand("schedule", "ASAP-schedule a gate list");
    sched->add_option("input", sched_in, "gate list file")->required();
    sched->add_flag("--serialize-t", serialize_flag, "at most one T-consuming gate per step");
    sched->add_option("--out", sched_out, "output scheduled file")->required();

    // simulate
    std::string sim_in, sim_capacity = "7", sim_trace, sim_events, sim_annotated;
    std::uint32_t sim_dist_t = 3;
    auto* sim = app.add_subcommand("simulate", "run the distillery/pool simulation");
    sim->add_option("input", sim_in, "scheduled gate list file")->required();
    sim->add_option("--capacity", sim_capacity, "pool capacity or 'unbounded'");
    sim->add_option("--dist-t", sim_dist_t, "time steps per distillation");
    sim->add_option("--trace", sim_trace, "write the per-step trace CSV here");
    sim->add_option("--events", sim_events, "write the event log CSV here");
    sim->add_option("--annotated", sim_annotated, "write the annotated gate list here");

    // estimate
    std::string est_in, est_report, est_trace_dir;
    std::optional<std::uint32_t> est_adder;
    std::uint32_t est_adder_value = 0;
    LayoutParams params;
    std::uint64_t est_capacity = params.pool_capacity_default;
    bool bare = false;
    auto* est = app.add_subcommand("estimate", "bounding boxes with and without pool control");
    est->add_option("input", est_in, "gate list file");
    auto* adder_opt = est->add_option("--adder", est_adder_value, "generate and use an n-bit adder");
    est->add_option("--capacity", est_capacity, "controlled-run pool capacity (default 7)");
    est->add_flag("--bare", bare, "computation partition only (no distillery/pool)");
    add_layout_flags(est, params);
    est->add_option("--report", est_report, "output report JSON")->required();
    est->add_option("--trace-dir", est_trace_dir, "directory for traces and annotated lists");

    // distribution
    std::string dist_in, dist_out;
    auto* dist = app.add_subcommand("distribution", "per-step T-gate counts as CSV");
    dist->add_option("input", dist_in, "scheduled gate list file")->required();
    dist->add_option("--out", dist_out, "output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (gen->parsed()) return cmd_gen_adder(adder_n, out_path);
        if (sched->parsed()) return cmd_schedule(sched_in, serialize_flag, sched_out);
        if (sim->parsed())
            return cmd_simulate(sim_in, sim_capacity, sim_dist_t, sim_trace, sim_events,
                                sim_annotated);
        if (est->parsed()) {
            if (adder_opt->count() > 0) est_adder = est_adder_value;
            if (est_adder.has_value() == !est_in.empty()) {
                std::cerr << "error: estimate needs exactly one of <input> or --adder\n";
                return 1;
            }
            return cmd_estimate(est_in, est_adder, est_capacity, bare, params, est_report,
                                est_trace_dir);
        }
        if (dist->parsed()) return cmd_distribution(dist_in, dist_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("distctl");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

} // namespace distctl
