#include "rachsim/radio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace rachsim {

PathLossModel PathLossModel::log_distance(double carrier_hz, double exponent) {
    if (!(carrier_hz > 0.0)) throw std::invalid_argument("carrier frequency must be positive");
    return PathLossModel{free_space_loss_db(carrier_hz, 1.0), exponent, carrier_hz};
}

double free_space_loss_db(double carrier_hz, double distance_m) {
    return 20.0 * std::log10(carrier_hz) + 20.0 * std::log10(distance_m) - 147.55;
}

double path_loss_db(const PathLossModel& model, double distance_m) {
    const double d = std::max(distance_m, 1.0);
    return model.reference_loss_db + 10.0 * model.exponent * std::log10(d);
}

double link_path_loss_db(const PathLossModel& model, const UeNode& ue, const CellSite& site) {
    const double ground = distance(ue.position, site.position);
    const double dh = site.antenna_height_m - ue.height_m;
    return path_loss_db(model, std::hypot(ground, dh));
}

double preamble_tx_power(const RaParameters& params, int attempt_no, double pl_serving_db) {
    if (attempt_no < 1) throw std::invalid_argument("attempt numbers start at 1");
    const double p = params.preamble_initial_target_power_dbm +
                     (attempt_no - 1) * params.power_ramping_step_db + pl_serving_db;
    return std::min(p, kUeMaxPowerDbm);
}

double noise_limited_sensitivity_dbm(double bandwidth_hz, double noise_figure_db, double required_snr_db) {
    return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db + required_snr_db;
}

double default_detection_threshold_dbm() {
    return std::round(noise_limited_sensitivity_dbm(839 * 1.25e3, 5.0, -14.2));
}

const BucketOutcome* OpportunityOutcome::find(int cell_id, int preamble_seq) const {
    auto it = std::lower_bound(buckets.begin(), buckets.end(), std::pair{cell_id, preamble_seq},
                               [](const BucketOutcome& b, const std::pair<int, int>& key) {
                                   return std::pair{b.cell_id, b.preamble_seq} < key;
                               });
    if (it == buckets.end() || it->cell_id != cell_id || it->preamble_seq != preamble_seq)
        return nullptr;
    return &*it;
}

BucketState OpportunityOutcome::state(int cell_id, int preamble_seq) const {
    const BucketOutcome* b = find(cell_id, preamble_seq);
    if (!b) return BucketState::Idle;
    return b->collided.empty() ? BucketState::Detected : BucketState::Collided;
}

bool OpportunityOutcome::detected_at(int cell_id, int preamble_seq, int ue_id) const {
    const BucketOutcome* b = find(cell_id, preamble_seq);
    return b && b->detected == ue_id;
}

long OpportunityOutcome::collided_transmissions() const {
    long n = 0;
    for (const BucketOutcome& b : buckets) n += static_cast<long>(b.collided.size());
    return n;
}

long OpportunityOutcome::lost_at_target() const {
    long n = 0;
    for (const Arrival& a : arrivals) {
        if (a.cell_id != a.target_cell_id) continue;
        const BucketOutcome* b = find(a.cell_id, a.preamble_seq);
        if (std::find(b->collided.begin(), b->collided.end(), a.ue_id) != b->collided.end()) ++n;
    }
    return n;
}

OpportunityOutcome resolve_opportunity(std::span<const PreambleTransmission> transmissions,
                                       int n_cells, const CellLossFn& loss,
                                       const ReceiverConfig& receiver) {
    OpportunityOutcome out;
    for (int cell = 0; cell < n_cells; ++cell) {
        for (const PreambleTransmission& tx : transmissions) {
            const double rx = tx.tx_power_dbm - loss(tx.ue_id, cell);
            // Tolerance absorbs rounding in (target + PL) - PL at the serving cell.
            if (rx >= receiver.detection_threshold_dbm - 1e-9)
                out.arrivals.push_back(Arrival{cell, tx.preamble_seq, tx.ue_id, tx.target_cell_id, rx});
        }
    }
    std::sort(out.arrivals.begin(), out.arrivals.end(), [](const Arrival& a, const Arrival& b) {
        return std::tie(a.cell_id, a.preamble_seq, a.ue_id) < std::tie(b.cell_id, b.preamble_seq, b.ue_id);
    });

    for (auto first = out.arrivals.begin(); first != out.arrivals.end();) {
        auto last = std::find_if(first, out.arrivals.end(), [&](const Arrival& a) {
            return a.cell_id != first->cell_id || a.preamble_seq != first->preamble_seq;
        });
        BucketOutcome bucket{first->cell_id, first->preamble_seq, std::nullopt, {}};
        if (last - first == 1) {
            bucket.detected = first->ue_id;
        } else {
            std::vector<const Arrival*> by_power;
            for (auto it = first; it != last; ++it) by_power.push_back(&*it);
            // Strongest first; ties by lower UE id.
            std::sort(by_power.begin(), by_power.end(), [](const Arrival* a, const Arrival* b) {
                if (a->rx_power_dbm != b->rx_power_dbm) return a->rx_power_dbm > b->rx_power_dbm;
                return a->ue_id < b->ue_id;
            });
            const bool captured = receiver.capture_margin_db &&
                                  by_power[0]->rx_power_dbm - by_power[1]->rx_power_dbm >=
                                      *receiver.capture_margin_db;
            if (captured) bucket.detected = by_power[0]->ue_id;
            for (auto it = first; it != last; ++it)
                if (!captured || it->ue_id != by_power[0]->ue_id) bucket.collided.push_back(it->ue_id);
        }
        out.buckets.push_back(std::move(bucket));
        first = last;
    }
    return out;
}

OpportunityOutcome resolve_opportunity(std::span<const PreambleTransmission> transmissions,
                                       const std::vector<CellSite>& cells,
                                       const std::vector<UeNode>& ues, const PathLossModel& model,
                                       const ReceiverConfig& receiver) {
    auto ue_by_id = [&](int id) -> const UeNode& {
        auto it = std::find_if(ues.begin(), ues.end(), [&](const UeNode& u) { return u.id == id; });
        if (it == ues.end()) throw std::invalid_argument("transmission from unknown UE");
        return *it;
    };
    const CellLossFn loss = [&](int ue_id, int cell_id) {
        return link_path_loss_db(model, ue_by_id(ue_id), cells.at(static_cast<std::size_t>(cell_id)));
    };
    return resolve_opportunity(transmissions, static_cast<int>(cells.size()), loss, receiver);
}

}  // namespace rachsim
