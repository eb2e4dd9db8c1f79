#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rachsim/engine.hpp"

namespace rachsim {

/// One line of runs.csv.
struct RunRow {
    int run_id = 0;
    std::uint64_t seed = 0;
    std::string scheme;
    int n_cells = 0;
    int n_ues = 0;
    long collisions = 0;
    int n_failed = 0;
    std::optional<double> delay_median_ms;
    std::optional<double> delay_mean_ms;
    std::optional<double> delay_p95_ms;
};

/// One line of summary.csv: all runs sharing (n_cells, scheme, n_ues).
struct SummaryRow {
    int n_cells = 0;
    std::string scheme;
    int n_ues = 0;
    int runs = 0;
    double mean_collisions = 0.0;
    long min_collisions = 0;
    long max_collisions = 0;
    int delay_runs = 0;  ///< runs with at least one connected UE
    std::optional<double> mean_median_delay_ms;
    std::optional<double> min_median_delay_ms;
    std::optional<double> max_median_delay_ms;
    std::optional<double> pct_decrease_collisions;
    std::optional<double> pct_decrease_delay;
};

/// Middle value, or the mean of the two middle values. Empty input -> nullopt.
std::optional<double> median(std::vector<int> values);

/// Nearest-rank percentile, p in (0, 100].
std::optional<double> percentile_nearest_rank(std::vector<int> values, double p);

/// 100 * (base - now) / base; nullopt when base <= 0.
std::optional<double> percent_decrease(double base, double now);

RunRow summarize_run(const RunResult& r, int run_id);

/// Groups rows by (n_cells, scheme, n_ues) in order of first appearance. Means
/// of per-run median delay skip runs where nobody connected. Percent decreases
/// are relative to the `baseline` scheme at the same (n_cells, n_ues); they are
/// empty when no baseline row exists or its value is zero. Throws
/// std::invalid_argument when groups have unequal repetition counts.
std::vector<SummaryRow> aggregate_runs(std::span<const RunRow> rows,
                                       const std::string& baseline = "same");

void write_runs_csv(std::ostream& out, std::span<const RunRow> rows);
/// Throws IngestError on malformed lines.
std::vector<RunRow> read_runs_csv(std::istream& in);
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

void write_events_header(std::ostream& out);
/// One line per above-threshold arrival:
/// run_id,time_sf,sfn,subframe,cell,seq,ue,target_cell,rx_dbm,outcome
void write_events(std::ostream& out, int run_id, const RunResult& r);

}  // namespace rachsim
