#include "crowdwarn/series.hpp"

#include "crowdwarn/errors.hpp"
#include "crowdwarn/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace crowdwarn {

const char* signal_name(Signal s) {
    return s == Signal::MapQuery ? "query" : "positioning";
}

void validate_series(const HourlySeries& series) {
    if (series.values.empty()) {
        throw Error(ErrorCode::data_error, "series for POI " + series.poi_id + " is empty");
    }
    for (std::size_t k = 0; k < series.values.size(); ++k) {
        if (series.values[k] < 0) {
            throw Error(ErrorCode::data_error,
                        "negative count in series for POI " + series.poi_id + " at " +
                            series.start.plus_hours(static_cast<std::int64_t>(k)).to_string());
        }
    }
}

namespace {

struct RawRow {
    HourTimestamp time;
    std::int64_t query = 0;
    std::int64_t positioning = 0;
    std::size_t line_no = 0;
};

std::int64_t parse_count(const std::string& field, std::size_t line_no, const char* what) {
    if (field.empty()) {
        throw Error(ErrorCode::data_error,
                    "line " + std::to_string(line_no) + ": empty " + what);
    }
    // Base-10 digits only; an explicit '-' is reported as a negative count.
    std::size_t i = 0;
    bool negative = false;
    if (field[0] == '-') {
        negative = true;
        i = 1;
    }
    if (i == field.size()) {
        throw Error(ErrorCode::data_error,
                    "line " + std::to_string(line_no) + ": malformed " + what + " '" + field + "'");
    }
    std::int64_t value = 0;
    for (; i < field.size(); ++i) {
        char c = field[i];
        if (c < '0' || c > '9') {
            throw Error(ErrorCode::data_error, "line " + std::to_string(line_no) +
                                                   ": malformed " + what + " '" + field + "'");
        }
        value = value * 10 + (c - '0');
    }
    if (negative) {
        throw Error(ErrorCode::data_error, "line " + std::to_string(line_no) + ": negative " +
                                               what + " '" + field + "'");
    }
    return value;
}

} // namespace

IngestResult ingest_series(const std::string& csv_text) {
    const std::vector<std::string> lines = split_lines(csv_text);
    if (lines.empty()) {
        throw Error(ErrorCode::data_error, "series CSV is empty");
    }
    {
        std::vector<std::string> header = split_csv_line(lines[0]);
        const std::vector<std::string> expected = {"poi_id", "timestamp", "query_count",
                                                   "positioning_count"};
        if (header != expected) {
            throw Error(ErrorCode::data_error,
                        "series CSV header must be poi_id,timestamp,query_count,positioning_count");
        }
    }

    std::map<std::string, std::vector<RawRow>> by_poi;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (lines[i].empty() || lines[i] == "\r") continue;
        std::vector<std::string> fields = split_csv_line(lines[i]);
        if (fields.size() != 4) {
            throw Error(ErrorCode::data_error, "line " + std::to_string(line_no) +
                                                   ": expected 4 fields, got " +
                                                   std::to_string(fields.size()));
        }
        if (fields[0].empty()) {
            throw Error(ErrorCode::data_error,
                        "line " + std::to_string(line_no) + ": empty poi_id");
        }
        auto time = HourTimestamp::parse(fields[1]);
        if (!time) {
            throw Error(ErrorCode::data_error, "line " + std::to_string(line_no) +
                                                   ": malformed timestamp '" + fields[1] + "'");
        }
        RawRow row;
        row.time = *time;
        row.query = parse_count(fields[2], line_no, "query_count");
        row.positioning = parse_count(fields[3], line_no, "positioning_count");
        row.line_no = line_no;
        by_poi[fields[0]].push_back(row);
    }
    if (by_poi.empty()) {
        throw Error(ErrorCode::data_error, "series CSV contains no data rows");
    }

    IngestResult result;
    for (auto& [poi_id, rows] : by_poi) {
        std::stable_sort(rows.begin(), rows.end(),
                         [](const RawRow& a, const RawRow& b) { return a.time < b.time; });
        for (std::size_t k = 1; k < rows.size(); ++k) {
            if (rows[k].time == rows[k - 1].time) {
                throw Error(ErrorCode::data_error,
                            "line " + std::to_string(rows[k].line_no) + ": duplicate timestamp " +
                                rows[k].time.to_string() + " for POI " + poi_id);
            }
        }

        const HourTimestamp first = rows.front().time;
        const HourTimestamp last = rows.back().time;
        const std::size_t span = static_cast<std::size_t>(last - first) + 1;

        PoiSeries poi;
        poi.poi_id = poi_id;
        poi.query = HourlySeries{poi_id, Signal::MapQuery, first,
                                 std::vector<std::int64_t>(span, 0)};
        poi.positioning = HourlySeries{poi_id, Signal::Positioning, first,
                                       std::vector<std::int64_t>(span, 0)};
        for (const RawRow& row : rows) {
            const auto k = static_cast<std::size_t>(row.time - first);
            poi.query.values[k] = row.query;
            poi.positioning.values[k] = row.positioning;
        }

        GapReport gap;
        gap.poi_id = poi_id;
        gap.filled_hours = static_cast<std::int64_t>(span - rows.size());
        gap.first = first;
        gap.last = last;

        result.pois.push_back(std::move(poi));
        result.gaps.push_back(gap);
    }
    return result;
}

std::string export_series_csv(const std::vector<PoiSeries>& pois) {
    std::ostringstream out;
    out << "poi_id,timestamp,query_count,positioning_count\n";
    for (const PoiSeries& poi : pois) {
        for (std::size_t k = 0; k < poi.query.values.size(); ++k) {
            out << poi.poi_id << ','
                << poi.query.start.plus_hours(static_cast<std::int64_t>(k)).to_string() << ','
                << poi.query.values[k] << ',' << poi.positioning.values[k] << '\n';
        }
    }
    return out.str();
}

std::string gap_report_json(const std::vector<GapReport>& gaps) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        out << "  {\"poi_id\": \"" << gaps[i].poi_id << "\", \"filled_hours\": "
            << gaps[i].filled_hours << ", \"first\": \"" << gaps[i].first.to_string()
            << "\", \"last\": \"" << gaps[i].last.to_string() << "\"}";
        if (i + 1 < gaps.size()) out << ',';
        out << '\n';
    }
    out << "]\n";
    return out.str();
}

DailyPeaks daily_peaks(const HourlySeries& series) {
    validate_series(series);

    DailyPeaks peaks;
    peaks.poi_id = series.poi_id;
    peaks.signal = series.signal;

    // First complete day starts at the first midnight >= start; each day is
    // the 24 hours [24d, 24d+23].
    const std::int64_t start_h = series.start.hour_number();
    const std::int64_t end_h = series.end().hour_number();
    // ceil(start_h / 24) * 24; truncation already rounds up for negatives
    const std::int64_t day_start0 =
        (start_h >= 0 ? (start_h + 23) / 24 : start_h / 24) * 24;

    for (std::int64_t day_start = day_start0; day_start + 23 <= end_h; day_start += 24) {
        std::int64_t best = -1;
        std::int64_t best_hour = day_start;
        for (std::int64_t h = day_start; h < day_start + 24; ++h) {
            const std::int64_t v = series.values[static_cast<std::size_t>(h - start_h)];
            if (v > best) {
                best = v;
                best_hour = h;
            }
        }
        DailyPeakEntry entry;
        entry.date = HourTimestamp::from_hour_number(day_start).date();
        entry.peak = best;
        entry.peak_hour = HourTimestamp::from_hour_number(best_hour);
        peaks.entries.push_back(entry);
    }

    if (peaks.entries.empty()) {
        throw Error(ErrorCode::insufficient_data,
                    "series for POI " + series.poi_id + " covers no complete calendar day");
    }
    return peaks;
}

std::vector<double> normalize_by_std(const HourlySeries& series) {
    validate_series(series);
    const std::size_t n = series.values.size();
    if (n < 2) {
        throw Error(ErrorCode::insufficient_data,
                    "normalize_by_std needs at least 2 values, got " + std::to_string(n));
    }
    double mean = 0.0;
    for (std::int64_t v : series.values) mean += static_cast<double>(v);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::int64_t v : series.values) {
        const double d = static_cast<double>(v) - mean;
        ss += d * d;
    }
    const double std_dev = std::sqrt(ss / static_cast<double>(n - 1));
    if (std_dev == 0.0) {
        throw Error(ErrorCode::insufficient_data,
                    "series for POI " + series.poi_id + " has zero standard deviation");
    }
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = static_cast<double>(series.values[k]) / std_dev;
    }
    return out;
}

AlignedSeries align(const HourlySeries& a, const HourlySeries& b) {
    validate_series(a);
    validate_series(b);
    if (a.poi_id != b.poi_id) {
        throw Error(ErrorCode::invalid_parameter,
                    "align requires series from the same POI, got " + a.poi_id + " and " +
                        b.poi_id);
    }
    const HourTimestamp start = std::max(a.start, b.start);
    const HourTimestamp end = std::min(a.end(), b.end());
    if (start > end) {
        throw Error(ErrorCode::insufficient_data,
                    "series for POI " + a.poi_id + " have no overlapping hours");
    }
    AlignedSeries out;
    out.start = start;
    const auto n = static_cast<std::size_t>(end - start) + 1;
    out.a.reserve(n);
    out.b.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const HourTimestamp t = start.plus_hours(static_cast<std::int64_t>(k));
        out.a.push_back(a.at(t));
        out.b.push_back(b.at(t));
    }
    return out;
}

} // namespace crowdwarn
