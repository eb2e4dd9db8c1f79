#include "rachsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rachsim/error.hpp"
#include "rachsim/rng.hpp"

namespace rachsim {

namespace {

constexpr std::uint64_t kPlacementStream = 0x706c6163656d656eULL;

}  // namespace

Scheme Scheme::parse(const std::string& text) {
    Scheme s;
    if (text == "same") {
        s.kind = SchemeKind::Same;
    } else if (text == "different") {
        s.kind = SchemeKind::DifferentRows;
    } else if (text == "coloring") {
        s.kind = SchemeKind::GreedyColoring;
    } else if (text.rfind("file:", 0) == 0 && text.size() > 5) {
        s.kind = SchemeKind::File;
        s.file = text.substr(5);
    } else {
        throw ConfigError("unknown scheme '" + text + "'");
    }
    return s;
}

std::string Scheme::label() const {
    switch (kind) {
        case SchemeKind::Same: return "same";
        case SchemeKind::DifferentRows: return "different";
        case SchemeKind::GreedyColoring: return "coloring";
        case SchemeKind::File: return "file:" + file.string();
    }
    return "?";
}

void ScenarioConfig::validate() const {
    auto require = [](bool ok, const char* key) {
        if (!ok) throw ConfigError(std::string("invalid value for ") + key);
    };
    require(n_cells >= 1, "n_cells");
    require(n_ues >= 0, "ue_counts");
    require(isd_m > 0.0, "isd_m");
    require(carrier_hz > 0.0, "carrier_hz");
    require(path_loss_exponent > 0.0, "radio.path_loss_exponent");
    require(antenna_height_m >= 0.0, "antenna_height_m");
    require(ue_height_m >= 0.0, "ue_height_m");
    require(!palette.empty(), "palette");
    if (scheme.kind == SchemeKind::DifferentRows) {
        auto sorted = palette;
        std::sort(sorted.begin(), sorted.end());
        require(sorted.size() == 4 && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "palette");
    }
    require(sim_time_ms >= 1, "sim_time_ms");
    require(repetitions >= 1, "repetitions");
    require(timeline.rar_delay_sf >= 1, "timeline.rar_delay_sf");
    require(timeline.msg3_delay_sf >= 1, "timeline.msg3_delay_sf");
    require(timeline.msg4_delay_sf >= 1, "timeline.msg4_delay_sf");
    require(!receiver.capture_margin_db || *receiver.capture_margin_db >= 0.0,
            "radio.capture_margin_db");
    ra.validate();
}

const char* to_string(SessionState s) {
    switch (s) {
        case SessionState::WaitingOpportunity: return "waiting_opportunity";
        case SessionState::WaitingRar: return "waiting_rar";
        case SessionState::WaitingMsg4: return "waiting_msg4";
        case SessionState::Connected: return "connected";
        case SessionState::Failed: return "failed";
    }
    return "?";
}

const char* to_string(FailReason r) {
    switch (r) {
        case FailReason::None: return "none";
        case FailReason::MaxAttempts: return "max_attempts";
        case FailReason::Timeout: return "timeout";
    }
    return "?";
}

Assignment make_assignment(const ScenarioConfig& cfg, const std::vector<CellSite>& sites) {
    switch (cfg.scheme.kind) {
        case SchemeKind::Same:
            return assign_same(sites, cfg.scheme.same_index);
        case SchemeKind::DifferentRows:
            return assign_alternating_rows(hex_rows(sites, cfg.isd_m), cfg.palette);
        case SchemeKind::GreedyColoring:
            return assign_greedy_coloring(neighbor_graph(sites, cfg.isd_m), cfg.palette);
        case SchemeKind::File:
            return load_assignment_file(cfg.scheme.file, static_cast<int>(sites.size()), cfg.palette);
    }
    throw ConfigError("unknown scheme");
}

namespace {

class Engine {
public:
    Engine(const ScenarioConfig& cfg, std::uint64_t seed) : cfg_(cfg), seed_(seed) {}

    RunResult run() {
        setup();
        for (AbsSubframe t = 0; t < cfg_.sim_time_ms; ++t) step(t);
        finish();
        return std::move(result_);
    }

private:
    void setup() {
        result_.seed = seed_;
        result_.n_cells = cfg_.n_cells;
        result_.n_ues = cfg_.n_ues;
        result_.scheme = cfg_.scheme.label();

        result_.cells = hex_grid(cfg_.n_cells, cfg_.isd_m, cfg_.antenna_height_m);
        result_.assignment = make_assignment(cfg_, result_.cells);
        for (CellSite& c : result_.cells) {
            c.prach_index = result_.assignment.at(c.id);
            rules_.push_back(occasion_rule(*c.prach_index));
        }

        Rng placement(substream_seed(seed_, kPlacementStream));
        result_.ues = place_ues_uniform(cfg_.n_ues, simulated_region(result_.cells, cfg_.isd_m),
                                        placement, cfg_.ue_height_m);

        const auto model = PathLossModel::log_distance(cfg_.carrier_hz, cfg_.path_loss_exponent);
        const auto n_cells = static_cast<std::size_t>(cfg_.n_cells);
        loss_.resize(result_.ues.size() * n_cells);
        for (const UeNode& ue : result_.ues)
            for (const CellSite& c : result_.cells)
                loss_[static_cast<std::size_t>(ue.id) * n_cells + static_cast<std::size_t>(c.id)] =
                    link_path_loss_db(model, ue, c);

        agenda_.assign(static_cast<std::size_t>(cfg_.sim_time_ms), {});
        for (const UeNode& ue : result_.ues) {
            UeSession s;
            s.ue_id = ue.id;
            s.serving_cell = serving_cell(ue, result_.cells, [&](const UeNode& u, const CellSite& c) {
                return loss(u.id, c.id);
            });
            rngs_.emplace_back(substream_seed(seed_, static_cast<std::uint64_t>(ue.id)));
            result_.sessions.push_back(s);
            // Everyone is active from subframe 0 and uses the first opportunity.
            wait_for_opportunity(result_.sessions.back(), 0);
        }
    }

    double loss(int ue, int cell) const {
        return loss_[static_cast<std::size_t>(ue) * static_cast<std::size_t>(cfg_.n_cells) +
                     static_cast<std::size_t>(cell)];
    }

    void wake(const UeSession& s, AbsSubframe t) {
        if (t < cfg_.sim_time_ms) agenda_[static_cast<std::size_t>(t)].push_back(s.ue_id);
    }

    void wait_for_opportunity(UeSession& s, AbsSubframe not_before) {
        s.state = SessionState::WaitingOpportunity;
        s.backoff_until = not_before;
        s.rar_time.reset();
        s.msg4_time.reset();
        wake(s, opportunity_at_or_after(rules_[static_cast<std::size_t>(s.serving_cell)], not_before));
    }

    void attempt_failed(UeSession& s, AbsSubframe t) {
        if (s.attempt_no >= cfg_.ra.preamble_trans_max) {
            s.state = SessionState::Failed;
            s.fail_reason = FailReason::MaxAttempts;
            return;
        }
        Rng& rng = rngs_[static_cast<std::size_t>(s.ue_id)];
        const auto backoff = rng.uniform_int(0, cfg_.ra.backoff_max_sf);
        wait_for_opportunity(s, t + 1 + backoff);
    }

    void step(AbsSubframe t) {
        auto& due = agenda_[static_cast<std::size_t>(t)];
        std::sort(due.begin(), due.end());

        std::vector<PreambleTransmission> txs;
        for (int id : due) {
            UeSession& s = result_.sessions[static_cast<std::size_t>(id)];
            switch (s.state) {
                case SessionState::WaitingOpportunity:
                    txs.push_back(transmit(s, t));
                    break;
                case SessionState::WaitingRar:
                    if (s.rar_time == t) {
                        s.state = SessionState::WaitingMsg4;
                        s.deadline = t + cfg_.timeline.msg3_delay_sf + cfg_.ra.contention_resolution_timer_sf;
                        if (cfg_.timeline.msg4_delay_sf <= cfg_.ra.contention_resolution_timer_sf) {
                            s.msg4_time = t + cfg_.timeline.msg3_delay_sf + cfg_.timeline.msg4_delay_sf;
                            wake(s, *s.msg4_time);
                        } else {
                            wake(s, s.deadline);
                        }
                    } else {
                        attempt_failed(s, t);
                    }
                    break;
                case SessionState::WaitingMsg4:
                    if (s.msg4_time == t) {
                        s.state = SessionState::Connected;
                        s.delay_ms = static_cast<int>(t - *s.first_tx_time);
                    } else {
                        attempt_failed(s, t);
                    }
                    break;
                case SessionState::Connected:
                case SessionState::Failed:
                    break;
            }
        }
        due.clear();
        due.shrink_to_fit();
        if (!txs.empty()) resolve(txs, t);
    }

    PreambleTransmission transmit(UeSession& s, AbsSubframe t) {
        const auto& rule = rules_[static_cast<std::size_t>(s.serving_cell)];
        if (!is_ra_opportunity(rule, RadioTime::from_absolute(t)))
            throw std::logic_error("transmission outside an RA opportunity");
        Rng& rng = rngs_[static_cast<std::size_t>(s.ue_id)];
        s.attempt_no += 1;
        s.chosen_seq = static_cast<int>(rng.uniform_int(0, cfg_.ra.num_ra_preambles - 1));
        if (!s.first_tx_time) s.first_tx_time = t;

        PreambleTransmission tx;
        tx.ue_id = s.ue_id;
        tx.target_cell_id = s.serving_cell;
        tx.preamble_seq = s.chosen_seq;
        tx.attempt_no = s.attempt_no;
        tx.tx_power_dbm = preamble_tx_power(cfg_.ra, s.attempt_no, loss(s.ue_id, s.serving_cell));
        result_.transmissions.push_back(TransmissionRecord{t, tx});
        return tx;
    }

    void resolve(const std::vector<PreambleTransmission>& txs, AbsSubframe t) {
        const CellLossFn cell_loss = [this](int ue, int cell) { return loss(ue, cell); };
        const OpportunityOutcome outcome = resolve_opportunity(txs, cfg_.n_cells, cell_loss, cfg_.receiver);

        for (const Arrival& a : outcome.arrivals) {
            const BucketOutcome* b = outcome.find(a.cell_id, a.preamble_seq);
            const bool decoded = b->detected == a.ue_id;
            result_.events.push_back(
                ArrivalEvent{t, a, decoded ? BucketState::Detected : BucketState::Collided});
        }
        for (const BucketOutcome& b : outcome.buckets)
            if (!b.collided.empty()) ++result_.collided_buckets;
        result_.collisions += outcome.lost_at_target();
        result_.collided_arrivals += outcome.collided_transmissions();

        // RAR window: from 3 subframes after the preamble for ra_response_window_sf.
        const int window_end = 2 + cfg_.ra.ra_response_window_sf;
        for (const PreambleTransmission& tx : txs) {
            UeSession& s = result_.sessions[static_cast<std::size_t>(tx.ue_id)];
            s.state = SessionState::WaitingRar;
            s.deadline = t + window_end;
            const bool heard = outcome.detected_at(tx.target_cell_id, tx.preamble_seq, tx.ue_id);
            if (heard && cfg_.timeline.rar_delay_sf <= window_end) {
                s.rar_time = t + cfg_.timeline.rar_delay_sf;
                wake(s, *s.rar_time);
            } else {
                wake(s, s.deadline);
            }
        }
    }

    void finish() {
        for (UeSession& s : result_.sessions) {
            if (s.state == SessionState::Connected) {
                result_.delays_ms.push_back(s.delay_ms);
                continue;
            }
            if (s.state != SessionState::Failed) {
                s.state = SessionState::Failed;
                s.fail_reason = FailReason::Timeout;
                result_.timed_out = true;
            }
            result_.failed_ues.push_back(s.ue_id);
        }
    }

    const ScenarioConfig& cfg_;
    std::uint64_t seed_;
    RunResult result_;
    std::vector<PrachOccasionRule> rules_;
    std::vector<double> loss_;
    std::vector<Rng> rngs_;
    std::vector<std::vector<int>> agenda_;
};

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    return Engine(cfg, seed).run();
}

}  // namespace rachsim
