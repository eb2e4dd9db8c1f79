#pragma once

#include <cstdint>
#include <vector>

#include "rachsim/engine.hpp"

namespace rachsim {

/// Cartesian sweep: cell counts x schemes x UE counts x repetitions. Everything
/// else comes from `base`.
struct SweepSpec {
    std::vector<int> cell_counts{2, 19};
    std::vector<int> ue_counts{10, 25, 50, 100, 200, 400};
    std::vector<Scheme> schemes{Scheme::parse("same"), Scheme::parse("different")};
    ScenarioConfig base;

    /// Throws ConfigError: ue_counts must be nonempty and strictly increasing.
    void validate() const;
};

struct SweepPoint {
    int run_id = 0;
    int n_cells = 0;
    int n_ues = 0;
    Scheme scheme;
    int repetition = 0;
    std::uint64_t seed = 0;  ///< base.seed + repetition
};

/// Points in output order: cell count, scheme, UE count, repetition.
std::vector<SweepPoint> expand_sweep(const SweepSpec& spec);

ScenarioConfig config_for(const SweepSpec& spec, const SweepPoint& point);

/// Reference implementation: one run after another.
std::vector<RunResult> run_sweep_serial(const SweepSpec& spec, const std::vector<SweepPoint>& points,
                                        bool keep_events = false);

/// Same results as run_sweep_serial, runs dispatched over `threads` OpenMP
/// threads (0 = OpenMP default). Runs share nothing; each result lands at its
/// point's index.
std::vector<RunResult> run_sweep_parallel(const SweepSpec& spec, const std::vector<SweepPoint>& points,
                                          int threads = 0, bool keep_events = false);

}  // namespace rachsim
