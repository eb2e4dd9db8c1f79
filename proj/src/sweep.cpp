#include "rachsim/sweep.hpp"

#include <exception>

#include <omp.h>

#include "rachsim/error.hpp"

namespace rachsim {

void SweepSpec::validate() const {
    if (ue_counts.empty()) throw ConfigError("ue_counts must not be empty");
    for (std::size_t i = 1; i < ue_counts.size(); ++i)
        if (ue_counts[i] <= ue_counts[i - 1]) throw ConfigError("ue_counts must be strictly increasing");
    if (cell_counts.empty()) throw ConfigError("n_cells must not be empty");
    if (schemes.empty()) throw ConfigError("schemes must not be empty");
    for (const Scheme& scheme : schemes) {
        ScenarioConfig cfg = base;
        cfg.scheme = scheme;
        for (int cells : cell_counts) {
            cfg.n_cells = cells;
            cfg.validate();
        }
    }
}

std::vector<SweepPoint> expand_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<SweepPoint> points;
    for (int cells : spec.cell_counts)
        for (const Scheme& scheme : spec.schemes)
            for (int ues : spec.ue_counts)
                for (int rep = 0; rep < spec.base.repetitions; ++rep) {
                    SweepPoint p;
                    p.run_id = static_cast<int>(points.size());
                    p.n_cells = cells;
                    p.n_ues = ues;
                    p.scheme = scheme;
                    p.repetition = rep;
                    p.seed = spec.base.seed + static_cast<std::uint64_t>(rep);
                    points.push_back(std::move(p));
                }
    return points;
}

ScenarioConfig config_for(const SweepSpec& spec, const SweepPoint& point) {
    ScenarioConfig cfg = spec.base;
    cfg.n_cells = point.n_cells;
    cfg.n_ues = point.n_ues;
    cfg.scheme = point.scheme;
    return cfg;
}

namespace {

RunResult run_point(const SweepSpec& spec, const SweepPoint& point, bool keep_events) {
    RunResult r = run_scenario(config_for(spec, point), point.seed);
    if (!keep_events) {
        r.events = {};
        r.transmissions = {};
    }
    return r;
}

}  // namespace

std::vector<RunResult> run_sweep_serial(const SweepSpec& spec, const std::vector<SweepPoint>& points,
                                        bool keep_events) {
    std::vector<RunResult> results;
    results.reserve(points.size());
    for (const SweepPoint& p : points) results.push_back(run_point(spec, p, keep_events));
    return results;
}

std::vector<RunResult> run_sweep_parallel(const SweepSpec& spec, const std::vector<SweepPoint>& points,
                                          int threads, bool keep_events) {
    std::vector<RunResult> results(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    const int n = static_cast<int>(points.size());
    const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            results[k] = run_point(spec, points[k], keep_events);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }

    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace rachsim
