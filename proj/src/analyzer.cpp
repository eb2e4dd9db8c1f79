#include "rachsim/analyzer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "rachsim/csv.hpp"
#include "rachsim/error.hpp"
#include "rachsim/prach.hpp"

namespace rachsim::analyzer {

namespace {

using Record = MeasurementRecord;

struct IntColumn {
    const char* name;
    int Record::*field;
};

const IntColumn kIntColumns[] = {
    {"band", &Record::band},
    {"earfcn", &Record::earfcn},
    {"enodeb_id", &Record::enodeb_id},
    {"cell_id", &Record::cell_id},
    {"prach_config_index", &Record::prach_config_index},
    {"num_ra_preambles", &Record::num_ra_preambles},
    {"power_ramping_step_db", &Record::power_ramping_step_db},
    {"preamble_initial_target_power_dbm", &Record::preamble_initial_target_power_dbm},
    {"preamble_trans_max", &Record::preamble_trans_max},
    {"ra_response_window_sf", &Record::ra_response_window_sf},
    {"contention_resolution_timer_sf", &Record::contention_resolution_timer_sf},
    {"zero_correlation_zone_config", &Record::zero_correlation_zone_config},
    {"prach_freq_offset", &Record::prach_freq_offset},
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::optional<AreaClass> parse_area(const std::string& s) {
    const std::string v = lower(csv::trim(s));
    if (v == "urban") return AreaClass::Urban;
    if (v == "suburban") return AreaClass::Suburban;
    if (v == "rural") return AreaClass::Rural;
    return std::nullopt;
}

std::optional<bool> parse_bool(const std::string& s) {
    const std::string v = lower(csv::trim(s));
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    return std::nullopt;
}

std::string field_text(const Record& r, const std::string& column) {
    if (column == "country") return r.country;
    if (column == "mno") return r.mno;
    if (column == "location_id") return r.location_id;
    if (column == "area_class") return to_string(r.area_class);
    if (column == "highspeed_flag") return r.highspeed_flag ? "true" : "false";
    for (const IntColumn& c : kIntColumns)
        if (column == c.name) return std::to_string(r.*c.field);
    return {};
}

std::string group_key(const Record& r, GroupBy by) {
    switch (by) {
        case GroupBy::None: return {};
        case GroupBy::Country: return r.country;
        case GroupBy::Mno: return r.mno;
    }
    return {};
}

const char* group_column(GroupBy by) { return by == GroupBy::Country ? "country" : "mno"; }

}  // namespace

const char* to_string(AreaClass a) {
    switch (a) {
        case AreaClass::Urban: return "urban";
        case AreaClass::Suburban: return "suburban";
        case AreaClass::Rural: return "rural";
    }
    return "?";
}

const std::vector<std::string>& record_columns() {
    static const std::vector<std::string> cols = {
        "country", "mno", "location_id", "area_class", "band", "earfcn", "enodeb_id", "cell_id",
        "prach_config_index", "num_ra_preambles", "power_ramping_step_db",
        "preamble_initial_target_power_dbm", "preamble_trans_max", "ra_response_window_sf",
        "contention_resolution_timer_sf", "highspeed_flag", "zero_correlation_zone_config",
        "prach_freq_offset"};
    return cols;
}

const std::vector<std::string>& ie_columns() {
    static const std::vector<std::string> cols = {
        "num_ra_preambles", "power_ramping_step_db", "preamble_initial_target_power_dbm",
        "preamble_trans_max", "ra_response_window_sf", "contention_resolution_timer_sf",
        "prach_config_index", "highspeed_flag", "zero_correlation_zone_config", "prach_freq_offset"};
    return cols;
}

LoadResult load_records(std::istream& in) {
    LoadResult result;
    std::string line;
    if (!std::getline(in, line)) return result;
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

    std::vector<std::string> header;
    for (const std::string& h : csv::split(line)) header.push_back(csv::trim(h));
    std::map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (std::find(record_columns().begin(), record_columns().end(), header[i]) == record_columns().end())
            result.warnings.push_back("ignoring unknown column '" + header[i] + "'");
        else if (!position.emplace(header[i], i).second)
            throw IngestError(1, "duplicate column " + header[i]);
    }
    for (const std::string& c : record_columns())
        if (!position.contains(c)) throw IngestError(1, "missing column " + c);

    std::set<std::tuple<std::string, std::string, int, int>> seen;
    for (std::size_t row = 2; std::getline(in, line); ++row) {
        if (csv::trim(line).empty()) continue;
        const auto fields = csv::split(line);
        if (fields.size() != header.size())
            throw IngestError(row, "expected " + std::to_string(header.size()) + " fields, got " +
                                       std::to_string(fields.size()));
        auto text = [&](const char* c) { return csv::trim(fields[position.at(c)]); };

        Record r;
        r.country = text("country");
        r.mno = text("mno");
        r.location_id = text("location_id");
        if (r.country.empty() || r.mno.empty() || r.location_id.empty())
            throw IngestError(row, "empty country, mno or location_id");
        const auto area = parse_area(text("area_class"));
        if (!area) throw IngestError(row, "unknown area_class '" + text("area_class") + "'");
        r.area_class = *area;
        const auto flag = parse_bool(text("highspeed_flag"));
        if (!flag) throw IngestError(row, "bad highspeed_flag '" + text("highspeed_flag") + "'");
        r.highspeed_flag = *flag;
        for (const IntColumn& c : kIntColumns) {
            const auto v = csv::parse_int(text(c.name));
            if (!v || *v < INT32_MIN || *v > INT32_MAX)
                throw IngestError(row, std::string("bad integer in ") + c.name);
            r.*c.field = static_cast<int>(*v);
        }
        if (r.prach_config_index < 0 || r.prach_config_index > 63)
            throw IngestError(row, "prach_config_index out of range: " + std::to_string(r.prach_config_index));

        if (!seen.emplace(r.location_id, r.mno, r.earfcn, r.cell_id).second) {
            ++result.duplicates_dropped;
            continue;
        }
        result.records.push_back(std::move(r));
    }
    return result;
}

void write_records_csv(std::ostream& out, const std::vector<MeasurementRecord>& records) {
    out << csv::join(record_columns()) << '\n';
    for (const Record& r : records) {
        std::vector<std::string> fields;
        for (const std::string& c : record_columns()) fields.push_back(field_text(r, c));
        out << csv::join(fields) << '\n';
    }
}

CollisionRiskHistogram collision_risk_histogram(const std::vector<MeasurementRecord>& records) {
    using Location = std::pair<std::string, std::string>;
    using GroupKey = std::tuple<Location, std::string, int, int>;
    std::map<GroupKey, int> sizes;
    for (const Record& r : records)
        ++sizes[GroupKey{{r.country, r.location_id}, r.mno, r.earfcn, r.prach_config_index}];

    CollisionRiskHistogram h;
    h.n_records = static_cast<int>(records.size());
    h.n_groups = static_cast<int>(sizes.size());
    std::map<Location, std::set<int>> sizes_at_location;
    for (const auto& [key, n] : sizes) {
        ++h.groups_by_size[n];
        sizes_at_location[std::get<0>(key)].insert(n);
    }
    h.n_locations = static_cast<int>(sizes_at_location.size());

    std::map<int, int> locations_with_size;
    for (const auto& [loc, present] : sizes_at_location) {
        for (int n : present) ++locations_with_size[n];
        if (*present.rbegin() >= 2) ++h.at_risk_locations;
    }
    for (const auto& [n, groups] : h.groups_by_size) {
        h.group_share[n] = static_cast<double>(groups) / h.n_groups;
        h.location_share[n] = static_cast<double>(locations_with_size[n]) / h.n_locations;
    }
    if (h.n_locations) h.at_risk_fraction = static_cast<double>(h.at_risk_locations) / h.n_locations;
    return h;
}

FormatUsage format_usage_by_area(const std::vector<MeasurementRecord>& records) {
    FormatUsage u;
    std::map<AreaClass, int> totals;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Record& r = records[i];
        if (!PrachConfigIndex::is_defined(r.prach_config_index)) {
            u.excluded.push_back(i);
            continue;
        }
        ++u.counts[{r.area_class, format_of_index(r.prach_config_index)}];
        ++totals[r.area_class];
    }
    for (const auto& [key, n] : u.counts)
        u.shares[key] = static_cast<double>(n) / totals.at(key.first);
    return u;
}

std::vector<std::pair<std::string, int>> unique_ie_value_counts(const std::vector<MeasurementRecord>& records) {
    std::vector<std::pair<std::string, int>> out;
    for (const std::string& column : ie_columns()) {
        std::set<std::string> values;
        for (const Record& r : records) values.insert(field_text(r, column));
        out.emplace_back(column, static_cast<int>(values.size()));
    }
    return out;
}

std::map<std::string, std::vector<MeasurementRecord>> group_records(
    const std::vector<MeasurementRecord>& records, GroupBy by) {
    std::map<std::string, std::vector<MeasurementRecord>> groups;
    for (const Record& r : records) groups[group_key(r, by)].push_back(r);
    return groups;
}

void write_histogram_csv(std::ostream& out, const std::vector<MeasurementRecord>& records) {
    out << "country,group_size,groups,group_share,location_share,at_risk_location_share\n";
    auto emit = [&](const std::string& label, const std::vector<Record>& subset) {
        const CollisionRiskHistogram h = collision_risk_histogram(subset);
        for (const auto& [size, groups] : h.groups_by_size) {
            out << csv::join({label, std::to_string(size), std::to_string(groups),
                              csv::format_fixed(h.group_share.at(size)),
                              csv::format_fixed(h.location_share.at(size)),
                              csv::format_fixed(h.at_risk_fraction)})
                << '\n';
        }
    };
    for (const auto& [country, subset] : group_records(records, GroupBy::Country)) emit(country, subset);
    emit("ALL", records);
}

void write_format_csv(std::ostream& out, const std::vector<MeasurementRecord>& records, GroupBy by) {
    if (by != GroupBy::None) out << group_column(by) << ',';
    out << "area_class,format,cells,share\n";
    for (const auto& [group, subset] : group_records(records, by)) {
        const FormatUsage u = format_usage_by_area(subset);
        for (const auto& [key, n] : u.counts) {
            if (by != GroupBy::None) out << csv::escape(group) << ',';
            out << to_string(key.first) << ',' << key.second << ',' << n << ','
                << csv::format_fixed(u.shares.at(key)) << '\n';
        }
    }
}

void write_unique_ies_csv(std::ostream& out, const std::vector<MeasurementRecord>& records, GroupBy by) {
    if (by != GroupBy::None) out << group_column(by) << ',';
    out << "ie,unique_values\n";
    for (const auto& [group, subset] : group_records(records, by)) {
        for (const auto& [ie, n] : unique_ie_value_counts(subset)) {
            if (by != GroupBy::None) out << csv::escape(group) << ',';
            out << ie << ',' << n << '\n';
        }
    }
}

}  // namespace rachsim::analyzer
