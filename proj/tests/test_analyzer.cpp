#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fixture20.hpp"
#include "rachsim/analyzer.hpp"
#include "rachsim/error.hpp"
#include "rachsim/prach.hpp"

using namespace rachsim;
using namespace rachsim::analyzer;

namespace {

std::string header() {
    std::string h;
    for (const auto& c : record_columns()) h += (h.empty() ? "" : ",") + c;
    return h + "\n";
}

std::string row(const std::string& loc, int cell, int index, const std::string& area = "urban", int step = 2,
                const std::string& country = "de") {
    return country + ",tel," + loc + "," + area + ",20,6300,1," + std::to_string(cell) + "," +
           std::to_string(index) + ",52," + std::to_string(step) + ",-104,10,10,64,false,12,4\n";
}

std::vector<MeasurementRecord> load(const std::string& text) {
    std::istringstream in(text);
    return load_records(in).records;
}

}  // namespace

TEST_CASE("load_records basics") {
    CHECK(load(header()).empty());
    CHECK(load("").empty());

    std::istringstream bad(header() + row("A", 1, 1) + row("A", 2, 64));
    try {
        load_records(bad);
        FAIL("expected IngestError");
    } catch (const IngestError& e) {
        CHECK(e.row() == 3);
        CHECK(std::string(e.what()).find("row 3") == 0);
    }

    std::istringstream dup(header() + row("A", 1, 1) + row("A", 1, 2));
    const auto res = load_records(dup);
    CHECK(res.records.size() == 1);
    CHECK(res.records[0].prach_config_index == 1);
    CHECK(res.duplicates_dropped == 1);

    std::istringstream area(header() + row("A", 1, 1, "metro"));
    CHECK_THROWS_AS(load_records(area), IngestError);

    std::istringstream missing("country,mno\nde,tel\n");
    CHECK_THROWS_AS(load_records(missing), IngestError);

    std::istringstream short_row(header() + "de,tel\n");
    CHECK_THROWS_AS(load_records(short_row), IngestError);
}

TEST_CASE("load_records accepts any column order and warns on extras") {
    auto cols = record_columns();
    std::reverse(cols.begin(), cols.end());
    const auto first = load(header() + row("A", 7, 18, "rural", 4));
    REQUIRE(first.size() == 1);
    std::string text;
    for (const auto& c : cols) text += c + ",";
    text += "extra\n";
    std::ostringstream body;
    write_records_csv(body, first);
    std::string line = body.str().substr(body.str().find('\n') + 1);
    line.pop_back();
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    std::reverse(fields.begin(), fields.end());
    for (const auto& f : fields) text += f + ",";
    text += "x\n";
    std::istringstream in(text);
    const auto res = load_records(in);
    REQUIRE(res.records.size() == 1);
    CHECK(res.warnings.size() == 1);
    CHECK(res.records[0].cell_id == 7);
    CHECK(res.records[0].prach_config_index == 18);
    CHECK(res.records[0].area_class == AreaClass::Rural);
    CHECK(res.records[0].power_ramping_step_db == 4);
}

TEST_CASE("write_records_csv round-trips") {
    const auto recs = synthetic_records(5, 4);
    std::ostringstream out;
    write_records_csv(out, recs);
    const auto back = load(out.str());
    REQUIRE(back.size() == recs.size());
    std::ostringstream again;
    write_records_csv(again, back);
    CHECK(again.str() == out.str());
}

TEST_CASE("collision risk histogram examples") {
    const auto h = collision_risk_histogram(load(header() + row("A", 1, 1) + row("A", 2, 1) + row("A", 3, 3)));
    CHECK(h.groups_by_size == std::map<int, int>{{1, 1}, {2, 1}});
    CHECK(h.group_share.at(1) == doctest::Approx(0.5));
    CHECK(h.at_risk_locations == 1);
    CHECK(h.at_risk_fraction == 1.0);

    const auto d = collision_risk_histogram(load(header() + row("A", 1, 1) + row("A", 2, 2) + row("B", 3, 2)));
    CHECK(d.groups_by_size == std::map<int, int>{{1, 3}});
    CHECK(d.at_risk_fraction == 0.0);

    const auto e = collision_risk_histogram({});
    CHECK(e.n_groups == 0);
    CHECK(e.at_risk_fraction == 0.0);
}

TEST_CASE("format usage examples") {
    const auto all1 = format_usage_by_area(load(header() + row("A", 1, 1) + row("A", 2, 1)));
    CHECK(all1.shares.size() == 1);
    CHECK(all1.shares.at({AreaClass::Urban, 0}) == 1.0);

    const auto mixed = format_usage_by_area(load(header() + row("A", 1, 1, "rural") + row("A", 2, 18, "rural")));
    CHECK(mixed.shares.at({AreaClass::Rural, 0}) == doctest::Approx(0.5));
    CHECK(mixed.shares.at({AreaClass::Rural, 1}) == doctest::Approx(0.5));
    CHECK(mixed.counts.count({AreaClass::Urban, 0}) == 0);

    const auto reserved = format_usage_by_area(load(header() + row("A", 1, 30) + row("A", 2, 2)));
    CHECK(reserved.excluded == std::vector<std::size_t>{0});
    CHECK(reserved.counts.at({AreaClass::Urban, 0}) == 1);

    CHECK(format_usage_by_area({}).shares.empty());
}

TEST_CASE("unique IE value counts examples") {
    const auto recs = load(header() + row("A", 1, 1, "urban", 2) + row("A", 2, 1, "urban", 2) +
                           row("A", 3, 1, "urban", 4));
    const auto u = unique_ie_value_counts(recs);
    REQUIRE(u.size() == ie_columns().size());
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(u[i].first == ie_columns()[i]);
    const auto get = [&](const std::string& n) {
        return std::find_if(u.begin(), u.end(), [&](const auto& p) { return p.first == n; })->second;
    };
    CHECK(get("power_ramping_step_db") == 2);
    CHECK(get("num_ra_preambles") == 1);
    CHECK(get("prach_config_index") == 1);
}

TEST_CASE("grouped unique counts match per-country set construction") {
    const auto recs = load(kFixture20);
    const auto groups = group_records(recs, GroupBy::Country);
    CHECK(groups.size() == 3);
    for (const auto& [country, list] : groups) {
        const auto u = unique_ie_value_counts(list);
        std::set<int> steps, targets, zczc;
        for (const auto& r : recs)
            if (r.country == country) {
                steps.insert(r.power_ramping_step_db);
                targets.insert(r.preamble_initial_target_power_dbm);
                zczc.insert(r.zero_correlation_zone_config);
            }
        for (const auto& [name, n] : u) {
            if (name == "power_ramping_step_db") CHECK(n == static_cast<int>(steps.size()));
            if (name == "preamble_initial_target_power_dbm") CHECK(n == static_cast<int>(targets.size()));
            if (name == "zero_correlation_zone_config") CHECK(n == static_cast<int>(zczc.size()));
        }
    }
    CHECK(group_records(recs, GroupBy::None).size() == 1);
}

TEST_CASE("writers add a group column when grouped") {
    const auto recs = load(kFixture20);
    std::ostringstream plain, grouped, formats;
    write_unique_ies_csv(plain, recs, GroupBy::None);
    write_unique_ies_csv(grouped, recs, GroupBy::Country);
    write_format_csv(formats, recs, GroupBy::Mno);
    CHECK(plain.str().rfind("ie,unique_values\n", 0) == 0);
    CHECK(grouped.str().rfind("country,ie,unique_values\n", 0) == 0);
    CHECK(formats.str().rfind("mno,area_class,format,cells,share\n", 0) == 0);
}

TEST_CASE("synthetic records resemble the measured population") {
    const auto a = synthetic_records(1);
    const auto b = synthetic_records(1);
    REQUIRE(a.size() == b.size());
    std::ostringstream x, y;
    write_records_csv(x, a);
    write_records_csv(y, b);
    CHECK(x.str() == y.str());
    CHECK(collision_risk_histogram(a).at_risk_fraction >= 0.6);
    const auto f = format_usage_by_area(a);
    int f0 = 0, total = 0;
    for (const auto& [key, n] : f.counts) {
        total += n;
        if (key.second == 0) f0 += n;
    }
    CHECK(f0 * 2 > total);
}
