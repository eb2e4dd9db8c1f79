#include "rachsim/radio_time.hpp"

#include <stdexcept>
#include <string>

namespace rachsim {

RadioTime RadioTime::make(int sfn, int subframe) {
    if (sfn < 0 || sfn >= kSfnModulus)
        throw std::invalid_argument("sfn out of range: " + std::to_string(sfn));
    if (subframe < 0 || subframe >= kSubframesPerFrame)
        throw std::invalid_argument("subframe out of range: " + std::to_string(subframe));
    return RadioTime{sfn, subframe};
}

RadioTime RadioTime::from_absolute(AbsSubframe t) {
    if (t < 0) throw std::invalid_argument("negative absolute subframe");
    const auto in_cycle = static_cast<int>(t % kSubframesPerCycle);
    return RadioTime{in_cycle / kSubframesPerFrame, in_cycle % kSubframesPerFrame};
}

}  // namespace rachsim
