#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "rachsim/error.hpp"
#include "rachsim/prach.hpp"

using namespace rachsim;

namespace {

// Second transcription of TS 36.211 Table 5.7.1-2, typed row by row from the
// standard as "index format sfn subframes". Kept as text so it shares nothing
// with the table in src/prach.cpp.
const char* kTranscription = R"(
0 0 even 1
1 0 even 4
2 0 even 7
3 0 any 1
4 0 any 4
5 0 any 7
6 0 any 1,6
7 0 any 2,7
8 0 any 3,8
9 0 any 1,4,7
10 0 any 2,5,8
11 0 any 3,6,9
12 0 any 0,2,4,6,8
13 0 any 1,3,5,7,9
14 0 any 0,1,2,3,4,5,6,7,8,9
15 0 even 9
16 1 even 1
17 1 even 4
18 1 even 7
19 1 any 1
20 1 any 4
21 1 any 7
22 1 any 1,6
23 1 any 2,7
24 1 any 3,8
25 1 any 1,4,7
26 1 any 2,5,8
27 1 any 3,6,9
28 1 any 0,2,4,6,8
29 1 any 1,3,5,7,9
30 na
31 1 even 9
32 2 even 1
33 2 even 4
34 2 even 7
35 2 any 1
36 2 any 4
37 2 any 7
38 2 any 1,6
39 2 any 2,7
40 2 any 3,8
41 2 any 1,4,7
42 2 any 2,5,8
43 2 any 3,6,9
44 2 any 0,2,4,6,8
45 2 any 1,3,5,7,9
46 na
47 2 even 9
48 3 even 1
49 3 even 4
50 3 even 7
51 3 any 1
52 3 any 4
53 3 any 7
54 3 any 1,6
55 3 any 2,7
56 3 any 3,8
57 3 any 1,4,7
58 3 any 2,5,8
59 3 any 3,6,9
60 na
61 na
62 na
63 3 even 9
)";

struct Expected {
    bool defined = false;
    int format = 0;
    std::string parity;
    std::set<int> subframes;
};

Expected expected_row(int index) {
    std::istringstream in(kTranscription);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        int idx = -1;
        std::string format;
        if (!(row >> idx >> format) || idx != index) continue;
        Expected e;
        if (format == "na") return e;
        e.defined = true;
        e.format = std::stoi(format);
        std::string sfs;
        row >> e.parity >> sfs;
        std::istringstream list(sfs);
        for (std::string sf; std::getline(list, sf, ',');) e.subframes.insert(std::stoi(sf));
        return e;
    }
    FAIL("index missing from transcription");
    return {};
}

std::set<int> subframe_set(const PrachOccasionRule& r) {
    std::set<int> out;
    for (int sf = 0; sf < kSubframesPerFrame; ++sf)
        if (r.subframes.test(static_cast<std::size_t>(sf))) out.insert(sf);
    return out;
}

}  // namespace

TEST_CASE("occasion_rule matches an independent transcription for every index") {
    for (int i = 0; i < 64; ++i) {
        CAPTURE(i);
        const Expected e = expected_row(i);
        CHECK(PrachConfigIndex::is_defined(i) == e.defined);
        if (!e.defined) {
            CHECK_THROWS_AS(occasion_rule(i), ConfigError);
            CHECK_THROWS_AS(format_of_index(i), ConfigError);
            continue;
        }
        const PrachOccasionRule r = occasion_rule(i);
        CHECK(r.format == e.format);
        CHECK(std::string(to_string(r.parity)) == e.parity);
        CHECK(subframe_set(r) == e.subframes);
        CHECK(format_of_index(i) == r.format);
        CHECK(r.subframes.any());
    }
}

TEST_CASE("worked examples") {
    CHECK(occasion_rule(1) == PrachOccasionRule{0, FrameParity::Even, std::bitset<10>(1u << 4)});
    CHECK(occasion_rule(0) == PrachOccasionRule{0, FrameParity::Even, std::bitset<10>(1u << 1)});
    CHECK(occasion_rule(15) == PrachOccasionRule{0, FrameParity::Even, std::bitset<10>(1u << 9)});
    for (int i : kUsableIndices) {
        CHECK(occasion_rule(i).format == 0);
        CHECK(occasion_rule(i).parity == FrameParity::Even);
    }
    CHECK(format_of_index(1) == 0);
    CHECK(format_of_index(18) == 1);
    CHECK(format_of_index(50) == 3);
}

TEST_CASE("index construction rejects reserved and out-of-range values") {
    CHECK_THROWS_AS(PrachConfigIndex(64), ConfigError);
    CHECK_THROWS_AS(PrachConfigIndex(-1), ConfigError);
    CHECK_THROWS_AS(PrachConfigIndex(30), ConfigError);
    CHECK_FALSE(PrachConfigIndex::try_make(61).has_value());
    CHECK(PrachConfigIndex(63).value() == 63);
}

TEST_CASE("radio time bounds and wrap") {
    CHECK_THROWS(RadioTime::make(1024, 0));
    CHECK_THROWS(RadioTime::make(0, 10));
    CHECK(RadioTime::from_absolute(10239) == RadioTime{1023, 9});
    CHECK(RadioTime::from_absolute(10240) == RadioTime{0, 0});
    CHECK(RadioTime{3, 9} < RadioTime{4, 0});
}

TEST_CASE("is_ra_opportunity") {
    const auto r = occasion_rule(1);
    CHECK(is_ra_opportunity(r, {4, 4}));
    CHECK_FALSE(is_ra_opportunity(r, {5, 4}));
    CHECK_FALSE(is_ra_opportunity(r, {4, 5}));
    const auto any = occasion_rule(14);
    for (int sf = 0; sf < 10; ++sf) CHECK(is_ra_opportunity(any, {7, sf}));
}

TEST_CASE("next_opportunity examples") {
    CHECK(next_opportunity(occasion_rule(1), RadioTime{0, 0}) == RadioTime{0, 4});
    CHECK(next_opportunity(occasion_rule(1), RadioTime{0, 4}) == RadioTime{2, 4});
    CHECK(next_opportunity(occasion_rule(15), RadioTime{1, 0}) == RadioTime{2, 9});
    CHECK(next_opportunity(occasion_rule(1), RadioTime{1022, 4}) == RadioTime{0, 4});
}

TEST_CASE("usable indices repeat every 20 subframes across the SFN wrap") {
    for (int i : kUsableIndices) {
        CAPTURE(i);
        const auto rule = occasion_rule(i);
        for (AbsSubframe start : {AbsSubframe{0}, AbsSubframe{10200}, AbsSubframe{123457}}) {
            AbsSubframe t = opportunity_at_or_after(rule, start);
            RadioTime rt = RadioTime::from_absolute(t);
            bool wrapped = false;
            for (int k = 0; k < 1100; ++k) {
                const RadioTime next = next_opportunity(rule, rt);
                const int gap = (next.cycle_index() - rt.cycle_index() + kSubframesPerCycle) % kSubframesPerCycle;
                REQUIRE(gap == 20);
                wrapped = wrapped || next.sfn < rt.sfn;
                rt = next;
            }
            CHECK(wrapped);
        }
    }
}

TEST_CASE("next_opportunity is the first opportunity: exhaustive over one SFN cycle") {
    for (int i = 0; i < 64; ++i) {
        if (!PrachConfigIndex::is_defined(i)) continue;
        CAPTURE(i);
        const auto rule = occasion_rule(i);
        for (int c = 0; c < kSubframesPerCycle; ++c) {
            const RadioTime t = RadioTime::from_absolute(c);
            const RadioTime n = next_opportunity(rule, t);
            REQUIRE(is_ra_opportunity(rule, n));
            const int gap = (n.cycle_index() - c + kSubframesPerCycle) % kSubframesPerCycle;
            REQUIRE(gap >= 1);
            for (int k = 1; k < gap; ++k)
                REQUIRE_FALSE(is_ra_opportunity(rule, RadioTime::from_absolute(c + k)));
        }
    }
}

TEST_CASE("RaParameters validation") {
    RaParameters ok;
    CHECK_NOTHROW(ok.validate());
    RaParameters bad = ok;
    bad.preamble_trans_max = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = ok;
    bad.ra_response_window_sf = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = ok;
    bad.num_ra_preambles = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}
