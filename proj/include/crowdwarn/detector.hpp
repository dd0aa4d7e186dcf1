#ifndef CROWDWARN_DETECTOR_HPP
#define CROWDWARN_DETECTOR_HPP

#include "crowdwarn/series.hpp"
#include "crowdwarn/warning_lines.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crowdwarn {

struct AlertRecord {
    std::string poi_id;
    HourTimestamp time;
    std::int64_t query_count = 0;
    double threshold_raw = 0.0;
    double alpha = 0.0;
};

struct GroundTruthPoint {
    std::string poi_id;
    HourTimestamp time;
    std::int64_t positioning_count = 0;
};

// Matching window: an alert at t warns about truth points in
// [t + min_lead_hours, t + horizon_hours]. min_lead >= 1 rules out
// simultaneous exceedance, which gives no early warning.
struct MatchConfig {
    int horizon_hours = 3;
    int min_lead_hours = 1;
};

void validate_match_config(const MatchConfig& cfg);

struct EvalReport {
    double alpha = 0.0;
    int tp_alerts = 0;
    int fp_alerts = 0;
    int detected_events = 0;
    int missed_events = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    bool both_empty = false;
};

// One alert per hour with query count >= the raw threshold, in time order.
// Throws Error(invalid_parameter) on a signal mismatch.
std::vector<AlertRecord> raise_alerts(const HourlySeries& query_series,
                                      const WarningLine& line_m);

// Pointwise positioning exceedances of the fixed alpha=3 line, in time order.
std::vector<GroundTruthPoint> ground_truth(const HourlySeries& positioning_series,
                                           const WarningLine& line_q);

// Merges maximal runs of consecutive truth hours into one point at the run's
// first hour (event onset). Used by the optional --cluster evaluation mode.
std::vector<GroundTruthPoint> cluster_ground_truth(const std::vector<GroundTruthPoint>& truth);

// Many-to-many matching: an alert is a true positive when any truth point
// falls inside its window; a truth point is detected when any alert covers
// it. Zero-denominator metrics are 0.
EvalReport match_and_score(const std::vector<AlertRecord>& alerts,
                           const std::vector<GroundTruthPoint>& truth,
                           const MatchConfig& cfg);

// One report per alpha, re-deriving the query line from the same fit each
// time. Alphas must be positive and ascending. Truth comes from line_q once.
std::vector<EvalReport> alpha_sweep(const HourlySeries& query_series,
                                    const HourlySeries& positioning_series,
                                    const WarningLine& line_q,
                                    const std::vector<double>& alphas,
                                    const MatchConfig& cfg,
                                    bool cluster = false);

// Unweighted mean of precision/recall/f1 across POIs at one alpha; counts
// are summed. Reports must share the alpha value.
EvalReport macro_average(const std::vector<EvalReport>& per_poi);

// Alerts as JSON lines {poi_id, timestamp, query_count, threshold_raw}.
std::string alerts_jsonl(const std::vector<AlertRecord>& alerts);

} // namespace crowdwarn

#endif
