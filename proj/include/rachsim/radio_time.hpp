#pragma once

#include <compare>
#include <cstdint>

namespace rachsim {

inline constexpr int kSubframesPerFrame = 10;
inline constexpr int kSfnModulus = 1024;
inline constexpr int kSubframesPerCycle = kSubframesPerFrame * kSfnModulus;  // 10240

/// Absolute simulation clock in subframes (1 ms each). Never wraps.
using AbsSubframe = std::int64_t;

/// (SFN, subframe) pair as seen over the air. SFN wraps at 1024.
struct RadioTime {
    int sfn = 0;
    int subframe = 0;

    /// Throws std::invalid_argument when out of range.
    static RadioTime make(int sfn, int subframe);
    static RadioTime from_absolute(AbsSubframe t);

    /// Position within one 10240-subframe SFN cycle.
    int cycle_index() const { return sfn * kSubframesPerFrame + subframe; }

    friend auto operator<=>(const RadioTime&, const RadioTime&) = default;
};

}  // namespace rachsim
