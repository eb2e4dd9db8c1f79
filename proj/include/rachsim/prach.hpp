#pragma once

#include <array>
#include <bitset>
#include <optional>

#include "rachsim/radio_time.hpp"

namespace rachsim {

/// Validated PRACH-ConfigIndex for FDD. Construction rejects values outside
/// 0..63 and the reserved rows of the FDD table (30, 46, 60, 61, 62).
class PrachConfigIndex {
public:
    explicit PrachConfigIndex(int value);

    /// Returns nullopt instead of throwing.
    static std::optional<PrachConfigIndex> try_make(int value);
    static bool is_defined(int value);

    int value() const { return value_; }
    friend bool operator==(PrachConfigIndex, PrachConfigIndex) = default;
    friend auto operator<=>(PrachConfigIndex, PrachConfigIndex) = default;

private:
    struct Unchecked {};
    PrachConfigIndex(int value, Unchecked) : value_(value) {}
    int value_;
};

enum class FrameParity { Even, Odd, Any };

const char* to_string(FrameParity p);

/// When a cell accepts preambles: preamble format, SFN constraint and the
/// allowed subframes within a matching frame.
struct PrachOccasionRule {
    int format = 0;
    FrameParity parity = FrameParity::Any;
    std::bitset<kSubframesPerFrame> subframes;

    friend bool operator==(const PrachOccasionRule&, const PrachOccasionRule&) = default;
};

PrachOccasionRule occasion_rule(PrachConfigIndex index);

/// Throws ConfigError for reserved or out-of-range values.
PrachOccasionRule occasion_rule(int index);
int format_of_index(int index);

bool is_ra_opportunity(const PrachOccasionRule& rule, RadioTime t);

/// Earliest opportunity strictly after `after`, following SFN wrap.
RadioTime next_opportunity(const PrachOccasionRule& rule, RadioTime after);

/// Absolute-clock variants used by the engine.
AbsSubframe next_opportunity(const PrachOccasionRule& rule, AbsSubframe after);
AbsSubframe opportunity_at_or_after(const PrachOccasionRule& rule, AbsSubframe t);

/// The four indices usable with preamble format 0 on even frames only.
inline constexpr std::array<int, 4> kUsableIndices{0, 1, 2, 15};

/// SIB2 random access parameters consumed by the UE and the cell.
struct RaParameters {
    int num_ra_preambles = 52;
    double power_ramping_step_db = 2.0;
    double preamble_initial_target_power_dbm = -104.0;
    int preamble_trans_max = 10;
    int ra_response_window_sf = 10;
    int contention_resolution_timer_sf = 64;
    int backoff_max_sf = 20;

    /// Throws ConfigError naming the first offending field.
    void validate() const;
};

}  // namespace rachsim
