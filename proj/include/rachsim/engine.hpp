#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rachsim/assignment.hpp"
#include "rachsim/prach.hpp"
#include "rachsim/radio.hpp"
#include "rachsim/topology.hpp"

namespace rachsim {

/// Message offsets in subframes: preamble -> RAR -> MSG3 -> MSG4.
struct Timeline {
    int rar_delay_sf = 3;
    int msg3_delay_sf = 6;
    int msg4_delay_sf = 4;
};

enum class SchemeKind { Same, DifferentRows, GreedyColoring, File };

struct Scheme {
    SchemeKind kind = SchemeKind::Same;
    PrachConfigIndex same_index{1};
    std::filesystem::path file;

    /// "same", "different", "coloring" or "file:<path>". Throws ConfigError.
    static Scheme parse(const std::string& text);
    /// Inverse of parse; the "same" index is not part of the label.
    std::string label() const;
};

struct ScenarioConfig {
    int n_cells = 19;
    int n_ues = 100;
    double isd_m = 200.0;
    double carrier_hz = 740e6;
    double path_loss_exponent = 3.76;
    double antenna_height_m = 30.0;
    double ue_height_m = 1.0;
    Scheme scheme;
    std::vector<PrachConfigIndex> palette = default_palette();
    RaParameters ra;
    ReceiverConfig receiver;
    Timeline timeline;
    int sim_time_ms = 5000;
    std::uint64_t seed = 1;
    int repetitions = 5;

    /// Throws ConfigError naming the offending key.
    void validate() const;
};

enum class SessionState { WaitingOpportunity, WaitingRar, WaitingMsg4, Connected, Failed };
enum class FailReason { None, MaxAttempts, Timeout };

const char* to_string(SessionState s);
const char* to_string(FailReason r);

/// Per-UE random access progress. `deadline` is the last subframe of the current
/// RAR window or contention resolution timer.
struct UeSession {
    int ue_id = 0;
    int serving_cell = 0;
    SessionState state = SessionState::WaitingOpportunity;
    FailReason fail_reason = FailReason::None;
    int attempt_no = 0;  ///< preambles sent so far
    int chosen_seq = -1;
    std::optional<AbsSubframe> first_tx_time;
    AbsSubframe backoff_until = 0;
    AbsSubframe deadline = 0;
    std::optional<AbsSubframe> rar_time;
    std::optional<AbsSubframe> msg4_time;
    int delay_ms = 0;  ///< valid when Connected
};

struct TransmissionRecord {
    AbsSubframe time = 0;
    PreambleTransmission tx;
};

/// One above-threshold arrival and what happened to it at that cell.
struct ArrivalEvent {
    AbsSubframe time = 0;
    Arrival arrival;
    BucketState outcome = BucketState::Idle;
};

struct RunResult {
    std::uint64_t seed = 0;
    int n_cells = 0;
    int n_ues = 0;
    std::string scheme;
    long collisions = 0;         ///< preambles lost at their intended cell
    long collided_arrivals = 0;  ///< collided arrivals at any cell
    long collided_buckets = 0;   ///< (time, cell, seq) buckets with a collision
    std::vector<int> delays_ms;  ///< connected UEs, by UE id
    std::vector<int> failed_ues;
    bool timed_out = false;  ///< some session was still open at the end
    Assignment assignment;
    std::vector<CellSite> cells;
    std::vector<UeNode> ues;
    std::vector<UeSession> sessions;
    std::vector<TransmissionRecord> transmissions;
    std::vector<ArrivalEvent> events;
};

/// Builds the topology, assigns indices, picks serving cells and runs the
/// procedure for every UE from subframe 0 to sim_time_ms. Deterministic in
/// (cfg, seed).
RunResult run_scenario(const ScenarioConfig& cfg, std::uint64_t seed);

/// Index assignment for `sites` under cfg.scheme. Throws AssignmentInfeasible or
/// ConfigError.
Assignment make_assignment(const ScenarioConfig& cfg, const std::vector<CellSite>& sites);

}  // namespace rachsim
