#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace rachsim::analyzer {

enum class AreaClass { Urban, Suburban, Rural };

const char* to_string(AreaClass a);

/// One decoded SIB2 observation of a cell.
struct MeasurementRecord {
    std::string country;
    std::string mno;
    std::string location_id;
    AreaClass area_class = AreaClass::Urban;
    int band = 0;
    int earfcn = 0;
    int enodeb_id = 0;
    int cell_id = 0;
    int prach_config_index = 0;
    int num_ra_preambles = 0;
    int power_ramping_step_db = 0;
    int preamble_initial_target_power_dbm = 0;
    int preamble_trans_max = 0;
    int ra_response_window_sf = 0;
    int contention_resolution_timer_sf = 0;
    bool highspeed_flag = false;
    int zero_correlation_zone_config = 0;
    int prach_freq_offset = 0;
};

/// Input column names, in canonical order.
const std::vector<std::string>& record_columns();

/// SIB2 random access IEs counted by unique_ie_value_counts, in output order.
const std::vector<std::string>& ie_columns();

struct LoadResult {
    std::vector<MeasurementRecord> records;
    std::vector<std::string> warnings;
    std::size_t duplicates_dropped = 0;
};

/// Reads comma separated records with a header naming every record column
/// (any order; extra columns are ignored with a warning). Rows sharing
/// (location_id, mno, earfcn, cell_id) keep the first occurrence. Throws
/// IngestError with the 1-based line number (header = line 1) on a missing
/// column, wrong field count, bad number, unknown area class or a PRACH index
/// outside 0..63.
LoadResult load_records(std::istream& in);

void write_records_csv(std::ostream& out, const std::vector<MeasurementRecord>& records);

/// Cells grouped by (location, mno, earfcn, prach_config_index); a location is
/// (country, location_id).
struct CollisionRiskHistogram {
    std::map<int, int> groups_by_size;
    std::map<int, double> group_share;     ///< groups of that size / all groups
    std::map<int, double> location_share;  ///< locations with such a group / all locations
    int n_groups = 0;
    int n_records = 0;
    int n_locations = 0;
    int at_risk_locations = 0;  ///< locations with a group of two or more
    double at_risk_fraction = 0.0;
};

CollisionRiskHistogram collision_risk_histogram(const std::vector<MeasurementRecord>& records);

struct FormatUsage {
    /// (area class, preamble format) -> cells. Classes without records are absent.
    std::map<std::pair<AreaClass, int>, int> counts;
    std::map<std::pair<AreaClass, int>, double> shares;  ///< within each class
    /// Records skipped because their index is reserved, by position in the input.
    std::vector<std::size_t> excluded;
};

FormatUsage format_usage_by_area(const std::vector<MeasurementRecord>& records);

/// IE column name -> number of distinct values, in ie_columns() order.
std::vector<std::pair<std::string, int>> unique_ie_value_counts(const std::vector<MeasurementRecord>& records);

enum class GroupBy { None, Country, Mno };

/// Partition preserving input order; with GroupBy::None a single "" group.
std::map<std::string, std::vector<MeasurementRecord>> group_records(
    const std::vector<MeasurementRecord>& records, GroupBy by);

/// Writers for the per-insight tables. Column layouts are documented in the README.
void write_histogram_csv(std::ostream& out, const std::vector<MeasurementRecord>& records);
void write_format_csv(std::ostream& out, const std::vector<MeasurementRecord>& records, GroupBy by);
void write_unique_ies_csv(std::ostream& out, const std::vector<MeasurementRecord>& records, GroupBy by);

/// Synthetic capture: three countries, three operators each, cells that mostly
/// share a small set of configurations. Deterministic in `seed`.
std::vector<MeasurementRecord> synthetic_records(std::uint64_t seed, int locations_per_country = 12);

}  // namespace rachsim::analyzer
