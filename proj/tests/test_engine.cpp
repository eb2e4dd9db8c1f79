#include <algorithm>
#include <map>
#include <tuple>

#include "doctest.h"
#include "rachsim/engine.hpp"
#include "rachsim/error.hpp"

using namespace rachsim;

namespace {

ScenarioConfig small(int cells, int ues, const char* scheme = "same") {
    ScenarioConfig c;
    c.n_cells = cells;
    c.n_ues = ues;
    c.scheme = Scheme::parse(scheme);
    c.sim_time_ms = 3000;
    return c;
}

// Arrivals at the intended cell inside a bucket of two or more, counted from the
// raw event list.
long recount(const RunResult& r) {
    std::map<std::tuple<AbsSubframe, int, int>, std::vector<const ArrivalEvent*>> buckets;
    for (const auto& e : r.events) buckets[{e.time, e.arrival.cell_id, e.arrival.preamble_seq}].push_back(&e);
    long n = 0;
    for (const auto& [key, list] : buckets)
        if (list.size() >= 2)
            for (const auto* e : list)
                if (e->arrival.cell_id == e->arrival.target_cell_id) ++n;
    return n;
}

}  // namespace

TEST_CASE("single UE, single cell connects after the message timeline") {
    const auto cfg = small(1, 1);
    for (std::uint64_t seed : {1u, 2u, 99u}) {
        const auto r = run_scenario(cfg, seed);
        REQUIRE(r.delays_ms.size() == 1);
        CHECK(r.delays_ms[0] == 13);
        CHECK(r.collisions == 0);
        CHECK(r.failed_ues.empty());
        CHECK_FALSE(r.timed_out);
        CHECK(r.sessions[0].state == SessionState::Connected);
        CHECK(r.sessions[0].attempt_no == 1);
    }
    auto c = cfg;
    c.timeline = Timeline{2, 5, 7};
    CHECK(run_scenario(c, 1).delays_ms[0] == 14);
}

TEST_CASE("two UEs forced onto the same preamble collide and both retry") {
    auto cfg = small(1, 2);
    cfg.ra.num_ra_preambles = 1;
    const auto r = run_scenario(cfg, 5);
    REQUIRE(r.transmissions.size() >= 2);
    const auto first = r.transmissions[0].time;
    CHECK(r.transmissions[1].time == first);
    CHECK(r.transmissions[0].tx.preamble_seq == r.transmissions[1].tx.preamble_seq);
    long at_first = 0;
    for (const auto& e : r.events)
        if (e.time == first) {
            CHECK(e.outcome == BucketState::Collided);
            ++at_first;
        }
    CHECK(at_first == 2);
    for (int ue : {0, 1}) {
        const auto n = std::count_if(r.transmissions.begin(), r.transmissions.end(),
                                     [&](const TransmissionRecord& t) { return t.tx.ue_id == ue; });
        CHECK(n >= 2);
    }
    CHECK(r.collisions >= 2);
    CHECK(r.collisions == recount(r));
}

TEST_CASE("UE that exhausts its attempts fails") {
    auto cfg = small(1, 2);
    cfg.ra.num_ra_preambles = 1;
    cfg.ra.preamble_trans_max = 1;
    const auto r = run_scenario(cfg, 5);
    CHECK(r.failed_ues.size() == 2);
    for (const auto& s : r.sessions) {
        CHECK(s.state == SessionState::Failed);
        CHECK(s.fail_reason == FailReason::MaxAttempts);
    }
}

TEST_CASE("sessions still open at the end time out") {
    auto cfg = small(1, 3);
    cfg.sim_time_ms = 5;
    const auto r = run_scenario(cfg, 1);
    CHECK(r.timed_out);
    CHECK(r.failed_ues.size() == 3);
    for (const auto& s : r.sessions) CHECK(s.fail_reason == FailReason::Timeout);
}

TEST_CASE("engine invariants across random scenarios") {
    const char* schemes[] = {"same", "different", "coloring"};
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const int cells = 1 + static_cast<int>(seed % 7);
        const int ues = 5 + static_cast<int>((seed * 37) % 120);
        auto cfg = small(cells, ues, schemes[seed % 3]);
        if (seed % 4 == 0) cfg.ra.num_ra_preambles = 4;
        CAPTURE(seed);
        const auto r = run_scenario(cfg, seed);

        CHECK(r.delays_ms.size() + r.failed_ues.size() == static_cast<std::size_t>(ues));
        std::map<int, int> per_ue;
        for (const auto& t : r.transmissions) {
            const auto& rule = occasion_rule(r.assignment.at(r.sessions[static_cast<std::size_t>(t.tx.ue_id)].serving_cell));
            CHECK(is_ra_opportunity(rule, RadioTime::from_absolute(t.time)));
            CHECK(t.tx.target_cell_id == r.sessions[static_cast<std::size_t>(t.tx.ue_id)].serving_cell);
            CHECK(t.tx.preamble_seq >= 0);
            CHECK(t.tx.preamble_seq < cfg.ra.num_ra_preambles);
            CHECK(t.tx.tx_power_dbm <= kUeMaxPowerDbm);
            CHECK(++per_ue[t.tx.ue_id] == t.tx.attempt_no);
        }
        for (const auto& [ue, n] : per_ue) CHECK(n <= cfg.ra.preamble_trans_max);
        for (const auto& s : r.sessions) {
            if (s.state == SessionState::Connected) {
                CHECK(s.delay_ms >= 13);
            } else {
                CHECK(s.state == SessionState::Failed);
            }
        }
        CHECK(r.collisions == recount(r));
        CHECK(r.collided_arrivals >= r.collisions);
    }
}

TEST_CASE("runs are deterministic in (config, seed)") {
    const auto cfg = small(19, 150, "different");
    const auto a = run_scenario(cfg, 77);
    const auto b = run_scenario(cfg, 77);
    CHECK(a.collisions == b.collisions);
    CHECK(a.delays_ms == b.delays_ms);
    CHECK(a.failed_ues == b.failed_ues);
    REQUIRE(a.transmissions.size() == b.transmissions.size());
    for (std::size_t i = 0; i < a.transmissions.size(); ++i) {
        CHECK(a.transmissions[i].time == b.transmissions[i].time);
        CHECK(a.transmissions[i].tx.ue_id == b.transmissions[i].tx.ue_id);
        CHECK(a.transmissions[i].tx.preamble_seq == b.transmissions[i].tx.preamble_seq);
        CHECK(a.transmissions[i].tx.tx_power_dbm == b.transmissions[i].tx.tx_power_dbm);
    }
    const auto c = run_scenario(cfg, 78);
    CHECK(c.ues[0].position != a.ues[0].position);
}

TEST_CASE("adding UEs leaves existing placements unchanged") {
    const auto a = run_scenario(small(2, 10), 3);
    const auto b = run_scenario(small(2, 40), 3);
    for (int i = 0; i < 10; ++i)
        CHECK(a.ues[static_cast<std::size_t>(i)].position == b.ues[static_cast<std::size_t>(i)].position);
}

TEST_CASE("scheme selection") {
    CHECK(Scheme::parse("same").kind == SchemeKind::Same);
    CHECK(Scheme::parse("different").kind == SchemeKind::DifferentRows);
    CHECK(Scheme::parse("coloring").kind == SchemeKind::GreedyColoring);
    CHECK(Scheme::parse("file:x.csv").file == "x.csv");
    CHECK(Scheme::parse("file:x.csv").label() == "file:x.csv");
    CHECK_THROWS_AS(Scheme::parse("rows"), ConfigError);

    const auto sites = hex_grid(2, 200.0);
    const auto a = make_assignment(small(2, 1, "different"), sites);
    CHECK(a.at(0).value() == 0);
    CHECK(a.at(1).value() == 1);
}

TEST_CASE("ScenarioConfig validation") {
    ScenarioConfig c;
    CHECK_NOTHROW(c.validate());
    c.n_cells = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = ScenarioConfig{};
    c.n_ues = -1;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = ScenarioConfig{};
    c.isd_m = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = ScenarioConfig{};
    c.timeline.rar_delay_sf = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = ScenarioConfig{};
    c.scheme = Scheme::parse("different");
    c.palette.pop_back();
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.scheme = Scheme::parse("coloring");
    CHECK_NOTHROW(c.validate());
}
