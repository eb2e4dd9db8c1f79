// rachsim: random access sweeps and SIB2 capture analysis.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rachsim/analyzer.hpp"
#include "rachsim/config.hpp"
#include "rachsim/error.hpp"
#include "rachsim/report.hpp"
#include "rachsim/sweep.hpp"

namespace fs = std::filesystem;
using namespace rachsim;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kConfig = 2, kInfeasible = 3, kIngest = 4 };

fs::path output_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("RACHSIM_OUT"); env && *env) return env;
    return ".";
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.imbue(std::locale::classic());
    return out;
}

struct SimulateOptions {
    std::string config;
    std::string scheme;
    int cells = 0;
    std::string ues;
    long long seed = -1;
    int reps = 0;
    int threads = 0;
    std::string out;
    bool events = false;
    bool serial = false;
};

int simulate(const SimulateOptions& opt) {
    SweepSpec spec;
    if (!opt.config.empty()) apply_config(spec, parse_config_file(opt.config));
    // Flags take precedence over the config file.
    if (!opt.scheme.empty()) set_config_value(spec, "schemes", opt.scheme);
    if (opt.cells > 0) set_config_value(spec, "n_cells", std::to_string(opt.cells));
    if (!opt.ues.empty()) set_config_value(spec, "ue_counts", opt.ues);
    if (opt.seed >= 0) set_config_value(spec, "seed", std::to_string(opt.seed));
    if (opt.reps > 0) set_config_value(spec, "repetitions", std::to_string(opt.reps));

    const auto points = expand_sweep(spec);
    const auto results = opt.serial ? run_sweep_serial(spec, points, opt.events)
                                    : run_sweep_parallel(spec, points, opt.threads, opt.events);

    std::vector<RunRow> rows;
    for (std::size_t i = 0; i < results.size(); ++i) {
        rows.push_back(summarize_run(results[i], points[i].run_id));
        if (results[i].timed_out)
            std::cerr << "warning: run " << points[i].run_id
                      << " ended with open sessions (counted as failed, reason timeout)\n";
    }
    const auto summary = aggregate_runs(rows);

    const fs::path dir = output_dir(opt.out);
    fs::create_directories(dir);
    {
        auto out = open_output(dir / "runs.csv");
        write_runs_csv(out, rows);
    }
    {
        auto out = open_output(dir / "summary.csv");
        write_summary_csv(out, summary);
    }
    if (opt.events) {
        auto out = open_output(dir / "events.csv");
        write_events_header(out);
        for (std::size_t i = 0; i < results.size(); ++i) write_events(out, points[i].run_id, results[i]);
    }

    for (const SummaryRow& s : summary) {
        std::cout << s.n_cells << " cells  " << s.scheme << "  " << s.n_ues << " UEs: collisions "
                  << s.mean_collisions;
        if (s.mean_median_delay_ms) std::cout << ", median delay " << *s.mean_median_delay_ms << " ms";
        if (s.scheme != "same" && s.pct_decrease_collisions)
            std::cout << " (" << *s.pct_decrease_collisions << "% fewer collisions)";
        std::cout << '\n';
    }
    std::cout << "wrote " << (dir / "runs.csv").string() << " and " << (dir / "summary.csv").string() << '\n';
    return kOk;
}

struct AnalyzeOptions {
    std::string input;
    std::string group_by;
    std::string out;
};

int analyze(const AnalyzeOptions& opt) {
    analyzer::GroupBy by = analyzer::GroupBy::None;
    if (opt.group_by == "country") by = analyzer::GroupBy::Country;
    else if (opt.group_by == "mno") by = analyzer::GroupBy::Mno;
    else if (!opt.group_by.empty()) throw ConfigError("--group-by must be country or mno");

    std::ifstream in(opt.input, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + opt.input);
    const auto loaded = analyzer::load_records(in);
    for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << '\n';
    if (loaded.duplicates_dropped)
        std::cerr << "note: dropped " << loaded.duplicates_dropped << " duplicate cell rows\n";
    const auto excluded = analyzer::format_usage_by_area(loaded.records).excluded.size();
    if (excluded)
        std::cerr << "note: " << excluded << " records with a reserved PRACH index left out of the format table\n";

    const fs::path dir = output_dir(opt.out);
    fs::create_directories(dir);
    {
        auto out = open_output(dir / "insight1_histogram.csv");
        analyzer::write_histogram_csv(out, loaded.records);
    }
    {
        auto out = open_output(dir / "insight2_formats.csv");
        analyzer::write_format_csv(out, loaded.records, by);
    }
    {
        auto out = open_output(dir / "insight3_unique_ies.csv");
        analyzer::write_unique_ies_csv(out, loaded.records, by);
    }
    std::cout << "analyzed " << loaded.records.size() << " records into " << dir.string() << '\n';
    return kOk;
}

int synth(long long seed, int locations, const std::string& path) {
    const auto records = analyzer::synthetic_records(static_cast<std::uint64_t>(seed), locations);
    if (path.empty() || path == "-") {
        analyzer::write_records_csv(std::cout, records);
    } else {
        auto out = open_output(path);
        analyzer::write_records_csv(out, records);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LTE random access simulator and SIB2 configuration analyzer"};
    app.require_subcommand(1);

    SimulateOptions sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "run a same/different configuration sweep");
    simulate_cmd->add_option("--config", sim.config, "key = value scenario file");
    simulate_cmd->add_option("--scheme", sim.scheme, "same|different|coloring|file:<path> (comma list allowed)");
    simulate_cmd->add_option("--cells", sim.cells, "number of cells");
    simulate_cmd->add_option("--ues", sim.ues, "UE counts, e.g. 10,50,100");
    simulate_cmd->add_option("--seed", sim.seed, "master seed");
    simulate_cmd->add_option("--reps", sim.reps, "repetitions per sweep point");
    simulate_cmd->add_option("--threads", sim.threads, "OpenMP threads for run dispatch (0 = default)");
    simulate_cmd->add_option("--out", sim.out, "output directory (default $RACHSIM_OUT or .)");
    simulate_cmd->add_flag("--events", sim.events, "also write events.csv");
    simulate_cmd->add_flag("--serial", sim.serial, "use the serial reference dispatcher");

    AnalyzeOptions ana;
    auto* analyze_cmd = app.add_subcommand("analyze", "tabulate insights from SIB2 capture records");
    analyze_cmd->add_option("--input", ana.input, "records CSV")->required();
    analyze_cmd->add_option("--group-by", ana.group_by, "country|mno");
    analyze_cmd->add_option("--out", ana.out, "output directory (default $RACHSIM_OUT or .)");

    long long synth_seed = 1;
    int synth_locations = 12;
    std::string synth_out;
    auto* synth_cmd = app.add_subcommand("synth", "write a synthetic SIB2 records fixture");
    synth_cmd->add_option("--seed", synth_seed, "generator seed");
    synth_cmd->add_option("--locations", synth_locations, "locations per country");
    synth_cmd->add_option("--out", synth_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*simulate_cmd) return simulate(sim);
        if (*analyze_cmd) return analyze(ana);
        if (*synth_cmd) return synth(synth_seed, synth_locations, synth_out);
    } catch (const IngestError& e) {
        std::cerr << "ingest error: " << e.what() << '\n';
        return kIngest;
    } catch (const AssignmentInfeasible& e) {
        std::cerr << "assignment infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
