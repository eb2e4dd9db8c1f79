#include "rachsim/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "rachsim/csv.hpp"
#include "rachsim/error.hpp"

namespace rachsim {

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
    throw ConfigError("invalid value for " + key + ": '" + value + "'");
}

long long to_int(const std::string& key, const std::string& value) {
    const auto v = csv::parse_int(value);
    if (!v) bad_value(key, value);
    return *v;
}

int to_int32(const std::string& key, const std::string& value) {
    const long long v = to_int(key, value);
    if (v < INT32_MIN || v > INT32_MAX) bad_value(key, value);
    return static_cast<int>(v);
}

double to_double(const std::string& key, const std::string& value) {
    const auto v = csv::parse_double(value);
    if (!v || !std::isfinite(*v)) bad_value(key, value);
    return *v;
}

std::vector<std::string> to_list(const std::string& value) {
    std::vector<std::string> items;
    for (const std::string& item : csv::split(value)) {
        const std::string t = csv::trim(item);
        if (!t.empty()) items.push_back(t);
    }
    return items;
}

std::vector<int> to_int_list(const std::string& key, const std::string& value) {
    std::vector<int> out;
    for (const std::string& item : to_list(value)) out.push_back(to_int32(key, item));
    if (out.empty()) bad_value(key, value);
    return out;
}

PrachConfigIndex to_index(const std::string& key, const std::string& value) {
    const auto index = PrachConfigIndex::try_make(to_int32(key, value));
    if (!index) bad_value(key, value);
    return *index;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string real(double v) {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s << v;
    return s.str();
}

struct Key {
    std::function<void(SweepSpec&, const std::string& key, const std::string& value)> set;
    std::function<std::string(const SweepSpec&)> get;
};

const std::vector<std::pair<std::string, Key>>& keys() {
    using S = SweepSpec;
    using V = const std::string&;
    static const std::vector<std::pair<std::string, Key>> table = {
        {"n_cells", {[](S& s, V k, V v) { s.cell_counts = to_int_list(k, v); },
                     [](const S& s) { return join_ints(s.cell_counts); }}},
        {"ue_counts", {[](S& s, V k, V v) { s.ue_counts = to_int_list(k, v); },
                       [](const S& s) { return join_ints(s.ue_counts); }}},
        {"schemes", {[](S& s, V k, V v) {
                         s.schemes.clear();
                         for (const auto& item : to_list(v)) {
                             Scheme sch = Scheme::parse(item);
                             sch.same_index = s.base.scheme.same_index;
                             s.schemes.push_back(sch);
                         }
                         if (s.schemes.empty()) bad_value(k, v);
                     },
                     [](const S& s) {
                         std::string out;
                         for (std::size_t i = 0; i < s.schemes.size(); ++i)
                             out += (i ? "," : "") + s.schemes[i].label();
                         return out;
                     }}},
        {"same_index", {[](S& s, V k, V v) {
                            s.base.scheme.same_index = to_index(k, v);
                            for (Scheme& sch : s.schemes) sch.same_index = s.base.scheme.same_index;
                        },
                        [](const S& s) { return std::to_string(s.base.scheme.same_index.value()); }}},
        {"palette", {[](S& s, V k, V v) {
                         s.base.palette.clear();
                         for (const auto& item : to_list(v)) s.base.palette.push_back(to_index(k, item));
                         if (s.base.palette.empty()) bad_value(k, v);
                     },
                     [](const S& s) {
                         std::vector<int> v;
                         for (auto p : s.base.palette) v.push_back(p.value());
                         return join_ints(v);
                     }}},
        {"isd_m", {[](S& s, V k, V v) { s.base.isd_m = to_double(k, v); },
                   [](const S& s) { return real(s.base.isd_m); }}},
        {"carrier_hz", {[](S& s, V k, V v) { s.base.carrier_hz = to_double(k, v); },
                        [](const S& s) { return real(s.base.carrier_hz); }}},
        {"antenna_height_m", {[](S& s, V k, V v) { s.base.antenna_height_m = to_double(k, v); },
                              [](const S& s) { return real(s.base.antenna_height_m); }}},
        {"ue_height_m", {[](S& s, V k, V v) { s.base.ue_height_m = to_double(k, v); },
                         [](const S& s) { return real(s.base.ue_height_m); }}},
        {"sim_time_ms", {[](S& s, V k, V v) { s.base.sim_time_ms = to_int32(k, v); },
                         [](const S& s) { return std::to_string(s.base.sim_time_ms); }}},
        {"seed", {[](S& s, V k, V v) {
                      const long long seed = to_int(k, v);
                      if (seed < 0) bad_value(k, v);
                      s.base.seed = static_cast<std::uint64_t>(seed);
                  },
                  [](const S& s) { return std::to_string(s.base.seed); }}},
        {"repetitions", {[](S& s, V k, V v) { s.base.repetitions = to_int32(k, v); },
                         [](const S& s) { return std::to_string(s.base.repetitions); }}},
        {"radio.path_loss_exponent", {[](S& s, V k, V v) { s.base.path_loss_exponent = to_double(k, v); },
                                      [](const S& s) { return real(s.base.path_loss_exponent); }}},
        {"radio.detection_threshold_dbm",
         {[](S& s, V k, V v) { s.base.receiver.detection_threshold_dbm = to_double(k, v); },
          [](const S& s) { return real(s.base.receiver.detection_threshold_dbm); }}},
        {"radio.capture_margin_db",
         {[](S& s, V k, V v) {
              if (v == "off" || v == "none") s.base.receiver.capture_margin_db.reset();
              else s.base.receiver.capture_margin_db = to_double(k, v);
          },
          [](const S& s) {
              return s.base.receiver.capture_margin_db ? real(*s.base.receiver.capture_margin_db)
                                                       : std::string("off");
          }}},
        {"ra.num_ra_preambles", {[](S& s, V k, V v) { s.base.ra.num_ra_preambles = to_int32(k, v); },
                                 [](const S& s) { return std::to_string(s.base.ra.num_ra_preambles); }}},
        {"ra.power_ramping_step_db",
         {[](S& s, V k, V v) { s.base.ra.power_ramping_step_db = to_double(k, v); },
          [](const S& s) { return real(s.base.ra.power_ramping_step_db); }}},
        {"ra.preamble_initial_target_power_dbm",
         {[](S& s, V k, V v) { s.base.ra.preamble_initial_target_power_dbm = to_double(k, v); },
          [](const S& s) { return real(s.base.ra.preamble_initial_target_power_dbm); }}},
        {"ra.preamble_trans_max", {[](S& s, V k, V v) { s.base.ra.preamble_trans_max = to_int32(k, v); },
                                   [](const S& s) { return std::to_string(s.base.ra.preamble_trans_max); }}},
        {"ra.ra_response_window_sf",
         {[](S& s, V k, V v) { s.base.ra.ra_response_window_sf = to_int32(k, v); },
          [](const S& s) { return std::to_string(s.base.ra.ra_response_window_sf); }}},
        {"ra.contention_resolution_timer_sf",
         {[](S& s, V k, V v) { s.base.ra.contention_resolution_timer_sf = to_int32(k, v); },
          [](const S& s) { return std::to_string(s.base.ra.contention_resolution_timer_sf); }}},
        {"ra.backoff_max_sf", {[](S& s, V k, V v) { s.base.ra.backoff_max_sf = to_int32(k, v); },
                               [](const S& s) { return std::to_string(s.base.ra.backoff_max_sf); }}},
        {"timeline.rar_delay_sf", {[](S& s, V k, V v) { s.base.timeline.rar_delay_sf = to_int32(k, v); },
                                   [](const S& s) { return std::to_string(s.base.timeline.rar_delay_sf); }}},
        {"timeline.msg3_delay_sf", {[](S& s, V k, V v) { s.base.timeline.msg3_delay_sf = to_int32(k, v); },
                                    [](const S& s) { return std::to_string(s.base.timeline.msg3_delay_sf); }}},
        {"timeline.msg4_delay_sf", {[](S& s, V k, V v) { s.base.timeline.msg4_delay_sf = to_int32(k, v); },
                                    [](const S& s) { return std::to_string(s.base.timeline.msg4_delay_sf); }}},
    };
    return table;
}

}  // namespace

ConfigEntries parse_config(std::istream& in) {
    ConfigEntries entries;
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (csv::trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        std::string key = csv::trim(std::string_view(line).substr(0, eq));
        if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        entries.emplace_back(std::move(key), csv::trim(std::string_view(line).substr(eq + 1)));
    }
    return entries;
}

ConfigEntries parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return parse_config(in);
}

void set_config_value(SweepSpec& spec, const std::string& key, const std::string& value) {
    for (const auto& [name, k] : keys()) {
        if (name == key) {
            k.set(spec, key, value);
            return;
        }
    }
    throw ConfigError("unknown config key '" + key + "'");
}

void apply_config(SweepSpec& spec, const ConfigEntries& entries) {
    for (const auto& [key, value] : entries) set_config_value(spec, key, value);
}

ConfigEntries dump_config(const SweepSpec& spec) {
    ConfigEntries out;
    for (const auto& [name, k] : keys()) out.emplace_back(name, k.get(spec));
    return out;
}

}  // namespace rachsim
