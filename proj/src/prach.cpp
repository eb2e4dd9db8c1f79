#include "rachsim/prach.hpp"

#include <string>

#include "rachsim/error.hpp"

namespace rachsim {

namespace {

struct TableRow {
    bool defined;
    int format;
    FrameParity parity;
    std::initializer_list<int> subframes;
};

using P = FrameParity;

// Frame structure type 1 random access configurations from TS 36.211.
// Four 16-row blocks, one per preamble format. Rows 30, 46, 60, 61 and 62 are N/A.
const TableRow kFddTable[64] = {
    // format 0
    {true, 0, P::Even, {1}}, {true, 0, P::Even, {4}}, {true, 0, P::Even, {7}},
    {true, 0, P::Any, {1}}, {true, 0, P::Any, {4}}, {true, 0, P::Any, {7}},
    {true, 0, P::Any, {1, 6}}, {true, 0, P::Any, {2, 7}}, {true, 0, P::Any, {3, 8}},
    {true, 0, P::Any, {1, 4, 7}}, {true, 0, P::Any, {2, 5, 8}}, {true, 0, P::Any, {3, 6, 9}},
    {true, 0, P::Any, {0, 2, 4, 6, 8}}, {true, 0, P::Any, {1, 3, 5, 7, 9}},
    {true, 0, P::Any, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}, {true, 0, P::Even, {9}},
    // format 1
    {true, 1, P::Even, {1}}, {true, 1, P::Even, {4}}, {true, 1, P::Even, {7}},
    {true, 1, P::Any, {1}}, {true, 1, P::Any, {4}}, {true, 1, P::Any, {7}},
    {true, 1, P::Any, {1, 6}}, {true, 1, P::Any, {2, 7}}, {true, 1, P::Any, {3, 8}},
    {true, 1, P::Any, {1, 4, 7}}, {true, 1, P::Any, {2, 5, 8}}, {true, 1, P::Any, {3, 6, 9}},
    {true, 1, P::Any, {0, 2, 4, 6, 8}}, {true, 1, P::Any, {1, 3, 5, 7, 9}},
    {false, 0, P::Any, {}}, {true, 1, P::Even, {9}},
    // format 2
    {true, 2, P::Even, {1}}, {true, 2, P::Even, {4}}, {true, 2, P::Even, {7}},
    {true, 2, P::Any, {1}}, {true, 2, P::Any, {4}}, {true, 2, P::Any, {7}},
    {true, 2, P::Any, {1, 6}}, {true, 2, P::Any, {2, 7}}, {true, 2, P::Any, {3, 8}},
    {true, 2, P::Any, {1, 4, 7}}, {true, 2, P::Any, {2, 5, 8}}, {true, 2, P::Any, {3, 6, 9}},
    {true, 2, P::Any, {0, 2, 4, 6, 8}}, {true, 2, P::Any, {1, 3, 5, 7, 9}},
    {false, 0, P::Any, {}}, {true, 2, P::Even, {9}},
    // format 3
    {true, 3, P::Even, {1}}, {true, 3, P::Even, {4}}, {true, 3, P::Even, {7}},
    {true, 3, P::Any, {1}}, {true, 3, P::Any, {4}}, {true, 3, P::Any, {7}},
    {true, 3, P::Any, {1, 6}}, {true, 3, P::Any, {2, 7}}, {true, 3, P::Any, {3, 8}},
    {true, 3, P::Any, {1, 4, 7}}, {true, 3, P::Any, {2, 5, 8}}, {true, 3, P::Any, {3, 6, 9}},
    {false, 0, P::Any, {}}, {false, 0, P::Any, {}}, {false, 0, P::Any, {}},
    {true, 3, P::Even, {9}},
};

bool parity_matches(FrameParity p, int sfn) {
    switch (p) {
        case FrameParity::Even: return sfn % 2 == 0;
        case FrameParity::Odd: return sfn % 2 == 1;
        case FrameParity::Any: return true;
    }
    return false;
}

}  // namespace

PrachConfigIndex::PrachConfigIndex(int value) : value_(value) {
    if (!is_defined(value))
        throw ConfigError("PRACH-ConfigIndex " + std::to_string(value) +
                          " is reserved or out of range for FDD");
}

std::optional<PrachConfigIndex> PrachConfigIndex::try_make(int value) {
    if (!is_defined(value)) return std::nullopt;
    return PrachConfigIndex(value, Unchecked{});
}

bool PrachConfigIndex::is_defined(int value) {
    return value >= 0 && value < 64 && kFddTable[value].defined;
}

const char* to_string(FrameParity p) {
    switch (p) {
        case FrameParity::Even: return "even";
        case FrameParity::Odd: return "odd";
        case FrameParity::Any: return "any";
    }
    return "?";
}

PrachOccasionRule occasion_rule(PrachConfigIndex index) {
    const TableRow& row = kFddTable[index.value()];
    PrachOccasionRule rule;
    rule.format = row.format;
    rule.parity = row.parity;
    for (int sf : row.subframes) rule.subframes.set(static_cast<std::size_t>(sf));
    return rule;
}

PrachOccasionRule occasion_rule(int index) { return occasion_rule(PrachConfigIndex(index)); }

int format_of_index(int index) { return kFddTable[PrachConfigIndex(index).value()].format; }

bool is_ra_opportunity(const PrachOccasionRule& rule, RadioTime t) {
    return rule.subframes.test(static_cast<std::size_t>(t.subframe)) &&
           parity_matches(rule.parity, t.sfn);
}

AbsSubframe next_opportunity(const PrachOccasionRule& rule, AbsSubframe after) {
    // Every defined rule repeats within two frames.
    for (AbsSubframe t = after + 1; t <= after + 2 * kSubframesPerFrame; ++t)
        if (is_ra_opportunity(rule, RadioTime::from_absolute(t))) return t;
    throw ConfigError("occasion rule has no opportunity");
}

AbsSubframe opportunity_at_or_after(const PrachOccasionRule& rule, AbsSubframe t) {
    if (is_ra_opportunity(rule, RadioTime::from_absolute(t))) return t;
    return next_opportunity(rule, t);
}

RadioTime next_opportunity(const PrachOccasionRule& rule, RadioTime after) {
    return RadioTime::from_absolute(next_opportunity(rule, AbsSubframe{after.cycle_index()}));
}

void RaParameters::validate() const {
    auto require = [](bool ok, const char* key) {
        if (!ok) throw ConfigError(std::string("invalid value for ra.") + key);
    };
    require(num_ra_preambles >= 1 && num_ra_preambles <= 64, "num_ra_preambles");
    require(power_ramping_step_db >= 0.0, "power_ramping_step_db");
    require(preamble_trans_max >= 1, "preamble_trans_max");
    require(ra_response_window_sf >= 1, "ra_response_window_sf");
    require(contention_resolution_timer_sf >= 1, "contention_resolution_timer_sf");
    require(backoff_max_sf >= 0, "backoff_max_sf");
}

}  // namespace rachsim
