#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rachsim/prach.hpp"
#include "rachsim/topology.hpp"

namespace rachsim {

inline constexpr double kUeMaxPowerDbm = 23.0;

/// Log-distance path loss: reference_loss_db + 10 * exponent * log10(d / 1 m).
struct PathLossModel {
    double reference_loss_db = 0.0;
    double exponent = 3.76;
    double carrier_hz = 740e6;

    /// Free-space loss at 1 m for `carrier_hz` as the reference.
    static PathLossModel log_distance(double carrier_hz, double exponent = 3.76);
};

/// Free-space path loss at `distance_m`: 20 log10(f) + 20 log10(d) - 147.55.
double free_space_loss_db(double carrier_hz, double distance_m);

/// Distances below 1 m are clamped to 1 m.
double path_loss_db(const PathLossModel& model, double distance_m);

/// Path loss over the 3-D UE-to-antenna distance.
double link_path_loss_db(const PathLossModel& model, const UeNode& ue, const CellSite& site);

/// Open-loop preamble power with ramping, capped at the UE maximum.
double preamble_tx_power(const RaParameters& params, int attempt_no, double pl_serving_db);

struct PreambleTransmission {
    int ue_id = 0;
    int target_cell_id = 0;
    int preamble_seq = 0;
    int attempt_no = 1;
    double tx_power_dbm = 0.0;
};

/// Thermal-noise-limited preamble sensitivity: kTB over the preamble bandwidth,
/// plus the receiver noise figure, plus the SNR the detector needs.
double noise_limited_sensitivity_dbm(double bandwidth_hz, double noise_figure_db, double required_snr_db);

/// 839 subcarriers at 1.25 kHz, 5 dB noise figure, format 0 detection at
/// -14.2 dB SNR: about -123 dBm.
double default_detection_threshold_dbm();

struct ReceiverConfig {
    /// Arrivals below this are neither detected nor counted as colliding.
    double detection_threshold_dbm = default_detection_threshold_dbm();
    /// Strongest of several same-sequence arrivals is decoded when it leads the
    /// runner-up by at least this margin. Disabled when empty.
    std::optional<double> capture_margin_db;
};

/// One above-threshold preamble seen at a cell.
struct Arrival {
    int cell_id = 0;
    int preamble_seq = 0;
    int ue_id = 0;
    int target_cell_id = 0;
    double rx_power_dbm = 0.0;
};

enum class BucketState { Idle, Detected, Collided };

/// Outcome for one (cell, preamble) pair with at least one arrival. With capture
/// disabled either `detected` is set and `collided` is empty, or `collided` holds
/// every arrival (two or more).
struct BucketOutcome {
    int cell_id = 0;
    int preamble_seq = 0;
    std::optional<int> detected;
    std::vector<int> collided;
};

struct OpportunityOutcome {
    /// Non-idle buckets ordered by (cell, seq).
    std::vector<BucketOutcome> buckets;
    /// Every above-threshold arrival, ordered by (cell, seq, ue).
    std::vector<Arrival> arrivals;

    BucketState state(int cell_id, int preamble_seq) const;
    const BucketOutcome* find(int cell_id, int preamble_seq) const;
    /// True when `ue_id` was decoded at `cell_id` on `preamble_seq`.
    bool detected_at(int cell_id, int preamble_seq, int ue_id) const;
    /// Sum of collided set sizes over all cells. A preamble heard by several
    /// cells can count more than once.
    long collided_transmissions() const;
    /// Collided arrivals at the cell the UE was addressing: each is a preamble
    /// its intended cell failed to receive.
    long lost_at_target() const;
};

using CellLossFn = std::function<double(int ue_id, int cell_id)>;

/// Resolves all preambles sent in one subframe on one carrier. Every
/// transmission is heard at every cell, whatever its target.
OpportunityOutcome resolve_opportunity(std::span<const PreambleTransmission> transmissions,
                                       int n_cells, const CellLossFn& loss,
                                       const ReceiverConfig& receiver);

OpportunityOutcome resolve_opportunity(std::span<const PreambleTransmission> transmissions,
                                       const std::vector<CellSite>& cells,
                                       const std::vector<UeNode>& ues, const PathLossModel& model,
                                       const ReceiverConfig& receiver);

}  // namespace rachsim
