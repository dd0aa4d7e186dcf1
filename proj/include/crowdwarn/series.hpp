#ifndef CROWDWARN_SERIES_HPP
#define CROWDWARN_SERIES_HPP

#include "crowdwarn/time.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crowdwarn {

enum class Signal { MapQuery, Positioning };

const char* signal_name(Signal s); // "query" / "positioning"

// Dense hourly counts for one POI and one signal. values[k] is the count
// for hour start + k; no gaps, all counts >= 0, length >= 1.
struct HourlySeries {
    std::string poi_id;
    Signal signal = Signal::MapQuery;
    HourTimestamp start;
    std::vector<std::int64_t> values;

    HourTimestamp end() const { // last covered hour
        return start.plus_hours(static_cast<std::int64_t>(values.size()) - 1);
    }
    std::int64_t at(HourTimestamp t) const { // caller guarantees t in range
        return values[static_cast<std::size_t>(t - start)];
    }
    bool covers(HourTimestamp t) const { return t >= start && t <= end(); }
};

// Validates the HourlySeries invariants; throws Error(data_error).
void validate_series(const HourlySeries& series);

struct DailyPeakEntry {
    CalendarDate date;
    std::int64_t peak = 0;
    HourTimestamp peak_hour; // earliest hour attaining the peak
};

// One entry per complete calendar day of the source series.
struct DailyPeaks {
    std::string poi_id;
    Signal signal = Signal::MapQuery;
    std::vector<DailyPeakEntry> entries;
};

// Query and positioning series for one POI, as ingested from one CSV.
// Both series share the same hour range.
struct PoiSeries {
    std::string poi_id;
    HourlySeries query;
    HourlySeries positioning;
};

struct GapReport {
    std::string poi_id;
    std::int64_t filled_hours = 0;
    HourTimestamp first;
    HourTimestamp last;
};

struct IngestResult {
    std::vector<PoiSeries> pois; // sorted by poi_id
    std::vector<GapReport> gaps; // one per POI, same order
};

// Parses series CSV text (header poi_id,timestamp,query_count,positioning_count;
// timestamps YYYY-MM-DDTHH:00). Rows may arrive unsorted; missing interior
// hours are zero-filled and counted in the gap report. Throws
// Error(data_error) naming the offending line on malformed timestamps,
// negative counts, or duplicate (poi, timestamp) pairs.
IngestResult ingest_series(const std::string& csv_text);

// Serializes series back to the canonical CSV (one row per POI per hour,
// POIs in sorted order). export(ingest(rows)) is bit-exact stable.
std::string export_series_csv(const std::vector<PoiSeries>& pois);

std::string gap_report_json(const std::vector<GapReport>& gaps);

// Daily peak extraction: one entry per complete day (24 hours present),
// partial boundary days excluded; ties broken by earliest hour.
// Throws Error(insufficient_data) when no complete day is covered.
DailyPeaks daily_peaks(const HourlySeries& series);

// values[k] / sample_std(values), n-1 denominator. Export/plotting only.
// Throws Error(insufficient_data) on length < 2 or zero std.
std::vector<double> normalize_by_std(const HourlySeries& series);

// Pairs of (a, b) values over the overlapping hour range.
struct AlignedSeries {
    HourTimestamp start;
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
};

// Throws Error(invalid_parameter) on POI mismatch and
// Error(insufficient_data) when the ranges are disjoint.
AlignedSeries align(const HourlySeries& a, const HourlySeries& b);

} // namespace crowdwarn

#endif
