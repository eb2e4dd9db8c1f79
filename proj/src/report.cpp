#include "rachsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "rachsim/csv.hpp"
#include "rachsim/error.hpp"

namespace rachsim {

std::optional<double> median(std::vector<int> values) {
    if (values.empty()) return std::nullopt;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return static_cast<double>(values[n / 2]);
    return (static_cast<double>(values[n / 2 - 1]) + static_cast<double>(values[n / 2])) / 2.0;
}

std::optional<double> percentile_nearest_rank(std::vector<int> values, double p) {
    if (values.empty()) return std::nullopt;
    std::sort(values.begin(), values.end());
    const auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * static_cast<double>(values.size())));
    return static_cast<double>(values[std::clamp<std::size_t>(rank, 1, values.size()) - 1]);
}

std::optional<double> percent_decrease(double base, double now) {
    if (!(base > 0.0)) return std::nullopt;
    return 100.0 * (base - now) / base;
}

RunRow summarize_run(const RunResult& r, int run_id) {
    RunRow row;
    row.run_id = run_id;
    row.seed = r.seed;
    row.scheme = r.scheme;
    row.n_cells = r.n_cells;
    row.n_ues = r.n_ues;
    row.collisions = r.collisions;
    row.n_failed = static_cast<int>(r.failed_ues.size());
    row.delay_median_ms = median(r.delays_ms);
    if (!r.delays_ms.empty())
        row.delay_mean_ms = std::accumulate(r.delays_ms.begin(), r.delays_ms.end(), 0.0) /
                            static_cast<double>(r.delays_ms.size());
    row.delay_p95_ms = percentile_nearest_rank(r.delays_ms, 95.0);
    return row;
}

std::vector<SummaryRow> aggregate_runs(std::span<const RunRow> rows, const std::string& baseline) {
    using Key = std::tuple<int, std::string, int>;
    std::vector<Key> order;
    std::map<Key, std::vector<const RunRow*>> groups;
    for (const RunRow& r : rows) {
        Key k{r.n_cells, r.scheme, r.n_ues};
        auto [it, inserted] = groups.try_emplace(k);
        if (inserted) order.push_back(k);
        it->second.push_back(&r);
    }

    std::vector<SummaryRow> out;
    for (const Key& k : order) {
        const auto& runs = groups.at(k);
        if (runs.size() != groups.at(order.front()).size())
            throw std::invalid_argument("unequal repetitions across sweep points");
        SummaryRow s;
        std::tie(s.n_cells, s.scheme, s.n_ues) = k;
        s.runs = static_cast<int>(runs.size());
        s.min_collisions = runs.front()->collisions;
        s.max_collisions = runs.front()->collisions;
        double collision_sum = 0.0, delay_sum = 0.0;
        for (const RunRow* r : runs) {
            collision_sum += static_cast<double>(r->collisions);
            s.min_collisions = std::min(s.min_collisions, r->collisions);
            s.max_collisions = std::max(s.max_collisions, r->collisions);
            if (!r->delay_median_ms) continue;
            const double d = *r->delay_median_ms;
            delay_sum += d;
            s.min_median_delay_ms = s.delay_runs ? std::min(*s.min_median_delay_ms, d) : d;
            s.max_median_delay_ms = s.delay_runs ? std::max(*s.max_median_delay_ms, d) : d;
            ++s.delay_runs;
        }
        s.mean_collisions = collision_sum / static_cast<double>(s.runs);
        if (s.delay_runs) s.mean_median_delay_ms = delay_sum / static_cast<double>(s.delay_runs);
        out.push_back(std::move(s));
    }

    for (SummaryRow& s : out) {
        auto base = std::find_if(out.begin(), out.end(), [&](const SummaryRow& b) {
            return b.scheme == baseline && b.n_cells == s.n_cells && b.n_ues == s.n_ues;
        });
        if (base == out.end()) continue;
        s.pct_decrease_collisions = percent_decrease(base->mean_collisions, s.mean_collisions);
        if (base->mean_median_delay_ms && s.mean_median_delay_ms)
            s.pct_decrease_delay = percent_decrease(*base->mean_median_delay_ms, *s.mean_median_delay_ms);
    }
    return out;
}

namespace {

const std::vector<std::string> kRunsHeader = {
    "run_id", "seed", "scheme", "n_cells", "n_ues", "collisions",
    "n_failed", "delay_median_ms", "delay_mean_ms", "delay_p95_ms"};

}  // namespace

void write_runs_csv(std::ostream& out, std::span<const RunRow> rows) {
    out << csv::join(kRunsHeader) << '\n';
    for (const RunRow& r : rows) {
        out << csv::join({std::to_string(r.run_id), std::to_string(r.seed), r.scheme,
                          std::to_string(r.n_cells), std::to_string(r.n_ues),
                          std::to_string(r.collisions), std::to_string(r.n_failed),
                          csv::format_optional(r.delay_median_ms),
                          csv::format_optional(r.delay_mean_ms),
                          csv::format_optional(r.delay_p95_ms)})
            << '\n';
    }
}

std::vector<RunRow> read_runs_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || csv::split(line) != kRunsHeader)
        throw IngestError(1, "runs.csv header mismatch");
    std::vector<RunRow> rows;
    for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
        if (csv::trim(line).empty()) continue;
        const auto f = csv::split(line);
        if (f.size() != kRunsHeader.size()) throw IngestError(line_no, "wrong field count");
        auto integer = [&](std::size_t i) {
            const auto v = csv::parse_int(f[i]);
            if (!v) throw IngestError(line_no, "bad integer in column " + kRunsHeader[i]);
            return *v;
        };
        auto optional_real = [&](std::size_t i) -> std::optional<double> {
            if (csv::trim(f[i]).empty()) return std::nullopt;
            const auto v = csv::parse_double(f[i]);
            if (!v) throw IngestError(line_no, "bad number in column " + kRunsHeader[i]);
            return v;
        };
        RunRow r;
        r.run_id = static_cast<int>(integer(0));
        r.seed = static_cast<std::uint64_t>(integer(1));
        r.scheme = f[2];
        r.n_cells = static_cast<int>(integer(3));
        r.n_ues = static_cast<int>(integer(4));
        r.collisions = static_cast<long>(integer(5));
        r.n_failed = static_cast<int>(integer(6));
        r.delay_median_ms = optional_real(7);
        r.delay_mean_ms = optional_real(8);
        r.delay_p95_ms = optional_real(9);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
    out << "n_cells,scheme,n_ues,runs,mean_collisions,min_collisions,max_collisions,"
           "delay_runs,mean_median_delay_ms,min_median_delay_ms,max_median_delay_ms,"
           "pct_decrease_collisions,pct_decrease_delay\n";
    for (const SummaryRow& s : rows) {
        out << csv::join({std::to_string(s.n_cells), s.scheme, std::to_string(s.n_ues),
                          std::to_string(s.runs), csv::format_fixed(s.mean_collisions),
                          std::to_string(s.min_collisions), std::to_string(s.max_collisions),
                          std::to_string(s.delay_runs),
                          csv::format_optional(s.mean_median_delay_ms),
                          csv::format_optional(s.min_median_delay_ms),
                          csv::format_optional(s.max_median_delay_ms),
                          csv::format_optional(s.pct_decrease_collisions),
                          csv::format_optional(s.pct_decrease_delay)})
            << '\n';
    }
}

void write_events_header(std::ostream& out) {
    out << "run_id,time_sf,sfn,subframe,cell,seq,ue,target_cell,rx_dbm,outcome\n";
}

void write_events(std::ostream& out, int run_id, const RunResult& r) {
    for (const ArrivalEvent& e : r.events) {
        const RadioTime rt = RadioTime::from_absolute(e.time);
        out << run_id << ',' << e.time << ',' << rt.sfn << ',' << rt.subframe << ','
            << e.arrival.cell_id << ',' << e.arrival.preamble_seq << ',' << e.arrival.ue_id << ','
            << e.arrival.target_cell_id << ',' << csv::format_fixed(e.arrival.rx_power_dbm, 3) << ','
            << (e.outcome == BucketState::Detected ? "detected" : "collided") << '\n';
    }
}

}  // namespace rachsim
