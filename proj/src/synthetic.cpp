#include <array>
#include <string>

#include "rachsim/analyzer.hpp"
#include "rachsim/rng.hpp"

namespace rachsim::analyzer {

namespace {

template <typename T, std::size_t N>
T pick(Rng& rng, const std::array<T, N>& values, const std::array<double, N>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = rng.uniform01() * total;
    for (std::size_t i = 0; i < N; ++i) {
        if (u < weights[i]) return values[i];
        u -= weights[i];
    }
    return values[N - 1];
}

}  // namespace

// Clearly synthetic: the shape (shared indices, format 0 dominance, few distinct
// IE values) is what the tests and demos need, not any real operator's data.
std::vector<MeasurementRecord> synthetic_records(std::uint64_t seed, int locations_per_country) {
    Rng rng(substream_seed(seed, 0x73796e7468ULL));
    static const std::array<int, 5> kEarfcns{1300, 1850, 3050, 6300, 9410};
    static const std::array<int, 5> kBands{3, 3, 7, 20, 28};

    std::vector<MeasurementRecord> out;
    int enodeb = 1000;
    for (int country = 1; country <= 3; ++country) {
        const std::string country_tag = "C" + std::to_string(country);
        // Country 2 is the only one with a noticeable share of format 1.
        const double format1_share = country == 2 ? 0.12 : 0.01;
        for (int loc = 0; loc < locations_per_country; ++loc) {
            const std::string loc_tag = country_tag + "-L" + std::to_string(loc);
            const auto area = pick(rng, std::array{AreaClass::Urban, AreaClass::Suburban, AreaClass::Rural},
                                   std::array{0.5, 0.3, 0.2});
            for (int mno = 1; mno <= 3; ++mno) {
                const std::string mno_tag = country_tag + "-M" + std::to_string(mno);
                const int n_carriers = 1 + static_cast<int>(rng.uniform_int(0, 1));
                for (int k = 0; k < n_carriers; ++k) {
                    const auto carrier = static_cast<std::size_t>(rng.uniform_int(0, kEarfcns.size() - 1));
                    const int n_cells = static_cast<int>(rng.uniform_int(1, 5));
                    const int site = enodeb++;
                    for (int c = 0; c < n_cells; ++c) {
                        MeasurementRecord r;
                        r.country = country_tag;
                        r.mno = mno_tag;
                        r.location_id = loc_tag;
                        r.area_class = area;
                        r.band = kBands[carrier];
                        r.earfcn = kEarfcns[carrier];
                        r.enodeb_id = site + static_cast<int>(rng.uniform_int(0, 2)) * 7919;
                        r.cell_id = c + 10 * k;
                        if (rng.uniform01() < format1_share) {
                            r.prach_config_index = pick(rng, std::array{19, 20, 22}, std::array{0.4, 0.4, 0.2});
                        } else {
                            r.prach_config_index = pick(rng, std::array{1, 3, 4, 5, 6},
                                                        std::array{0.55, 0.15, 0.1, 0.1, 0.1});
                        }
                        r.num_ra_preambles = pick(rng, std::array{52, 56, 60}, std::array{0.7, 0.2, 0.1});
                        r.power_ramping_step_db = pick(rng, std::array{2, 4}, std::array{0.8, 0.2});
                        r.preamble_initial_target_power_dbm =
                            pick(rng, std::array{-104, -110, -100}, std::array{0.6, 0.3, 0.1});
                        r.preamble_trans_max = pick(rng, std::array{10, 8}, std::array{0.85, 0.15});
                        r.ra_response_window_sf = country == 3 ? 10 : pick(rng, std::array{10, 8}, std::array{0.8, 0.2});
                        r.contention_resolution_timer_sf = pick(rng, std::array{64, 48}, std::array{0.9, 0.1});
                        r.highspeed_flag = false;
                        r.zero_correlation_zone_config = pick(rng, std::array{5, 12, 13, 15}, std::array{0.3, 0.3, 0.2, 0.2});
                        r.prach_freq_offset = pick(rng, std::array{2, 4, 7, 22}, std::array{0.3, 0.3, 0.2, 0.2});
                        out.push_back(std::move(r));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace rachsim::analyzer
