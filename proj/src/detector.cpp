#include "crowdwarn/detector.hpp"

#include "crowdwarn/errors.hpp"
#include "crowdwarn/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace crowdwarn {

void validate_match_config(const MatchConfig& cfg) {
    if (cfg.horizon_hours < 1) {
        throw Error(ErrorCode::invalid_parameter,
                    "horizon T must be >= 1 hour, got " + std::to_string(cfg.horizon_hours));
    }
    if (cfg.min_lead_hours < 1 || cfg.min_lead_hours > cfg.horizon_hours) {
        throw Error(ErrorCode::invalid_parameter,
                    "min_lead must satisfy 1 <= min_lead <= T, got " +
                        std::to_string(cfg.min_lead_hours));
    }
}

std::vector<AlertRecord> raise_alerts(const HourlySeries& query_series,
                                      const WarningLine& line_m) {
    if (query_series.signal != Signal::MapQuery || line_m.signal != Signal::MapQuery) {
        throw Error(ErrorCode::invalid_parameter,
                    "raise_alerts needs a map-query series and a map-query warning line");
    }
    validate_series(query_series);
    std::vector<AlertRecord> alerts;
    for (std::size_t k = 0; k < query_series.values.size(); ++k) {
        const std::int64_t v = query_series.values[k];
        if (exceeds(line_m, v)) {
            AlertRecord alert;
            alert.poi_id = query_series.poi_id;
            alert.time = query_series.start.plus_hours(static_cast<std::int64_t>(k));
            alert.query_count = v;
            alert.threshold_raw = line_m.threshold_raw;
            alert.alpha = line_m.alpha;
            alerts.push_back(std::move(alert));
        }
    }
    return alerts;
}

std::vector<GroundTruthPoint> ground_truth(const HourlySeries& positioning_series,
                                           const WarningLine& line_q) {
    if (positioning_series.signal != Signal::Positioning ||
        line_q.signal != Signal::Positioning) {
        throw Error(ErrorCode::invalid_parameter,
                    "ground_truth needs a positioning series and a positioning warning line");
    }
    validate_series(positioning_series);
    std::vector<GroundTruthPoint> truth;
    for (std::size_t k = 0; k < positioning_series.values.size(); ++k) {
        const std::int64_t v = positioning_series.values[k];
        if (exceeds(line_q, v)) {
            GroundTruthPoint point;
            point.poi_id = positioning_series.poi_id;
            point.time = positioning_series.start.plus_hours(static_cast<std::int64_t>(k));
            point.positioning_count = v;
            truth.push_back(std::move(point));
        }
    }
    return truth;
}

std::vector<GroundTruthPoint> cluster_ground_truth(const std::vector<GroundTruthPoint>& truth) {
    std::vector<GroundTruthPoint> onsets;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (i == 0 || truth[i].time - truth[i - 1].time > 1) {
            onsets.push_back(truth[i]);
        }
    }
    return onsets;
}

EvalReport match_and_score(const std::vector<AlertRecord>& alerts,
                           const std::vector<GroundTruthPoint>& truth,
                           const MatchConfig& cfg) {
    validate_match_config(cfg);

    EvalReport report;
    if (alerts.empty() && truth.empty()) {
        report.both_empty = true;
        return report;
    }

    // Truth times are chronological; binary search for a point in
    // [t + min_lead, t + horizon].
    std::vector<std::int64_t> truth_hours;
    truth_hours.reserve(truth.size());
    for (const GroundTruthPoint& point : truth) truth_hours.push_back(point.time.hour_number());

    int tp = 0;
    for (const AlertRecord& alert : alerts) {
        const std::int64_t lo = alert.time.hour_number() + cfg.min_lead_hours;
        const std::int64_t hi = alert.time.hour_number() + cfg.horizon_hours;
        auto it = std::lower_bound(truth_hours.begin(), truth_hours.end(), lo);
        if (it != truth_hours.end() && *it <= hi) ++tp;
    }

    std::vector<std::int64_t> alert_hours;
    alert_hours.reserve(alerts.size());
    for (const AlertRecord& alert : alerts) alert_hours.push_back(alert.time.hour_number());

    int detected = 0;
    for (const GroundTruthPoint& point : truth) {
        const std::int64_t lo = point.time.hour_number() - cfg.horizon_hours;
        const std::int64_t hi = point.time.hour_number() - cfg.min_lead_hours;
        auto it = std::lower_bound(alert_hours.begin(), alert_hours.end(), lo);
        if (it != alert_hours.end() && *it <= hi) ++detected;
    }

    report.tp_alerts = tp;
    report.fp_alerts = static_cast<int>(alerts.size()) - tp;
    report.detected_events = detected;
    report.missed_events = static_cast<int>(truth.size()) - detected;
    if (!alerts.empty()) {
        report.precision = static_cast<double>(tp) / static_cast<double>(alerts.size());
    }
    if (!truth.empty()) {
        report.recall = static_cast<double>(detected) / static_cast<double>(truth.size());
    }
    if (report.precision + report.recall > 0.0) {
        report.f1 =
            2.0 * report.precision * report.recall / (report.precision + report.recall);
    }
    return report;
}

std::vector<EvalReport> alpha_sweep(const HourlySeries& query_series,
                                    const HourlySeries& positioning_series,
                                    const WarningLine& line_q,
                                    const std::vector<double>& alphas,
                                    const MatchConfig& cfg,
                                    bool cluster) {
    validate_match_config(cfg);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] > 0.0)) {
            throw Error(ErrorCode::invalid_parameter, "sweep alphas must be positive");
        }
        if (i > 0 && alphas[i] < alphas[i - 1]) {
            throw Error(ErrorCode::invalid_parameter, "sweep alphas must be ascending");
        }
    }
    if (alphas.empty()) return {};

    std::vector<GroundTruthPoint> truth = ground_truth(positioning_series, line_q);
    if (cluster) truth = cluster_ground_truth(truth);

    const LogNormalPeakFit fit = fit_log_peaks(daily_peaks(query_series));

    std::vector<EvalReport> reports;
    reports.reserve(alphas.size());
    for (double alpha : alphas) {
        const WarningLine line_m = warning_line(fit, alpha, Signal::MapQuery);
        const std::vector<AlertRecord> alerts = raise_alerts(query_series, line_m);
        EvalReport report = match_and_score(alerts, truth, cfg);
        report.alpha = alpha;
        reports.push_back(report);
    }
    return reports;
}

EvalReport macro_average(const std::vector<EvalReport>& per_poi) {
    if (per_poi.empty()) {
        throw Error(ErrorCode::invalid_parameter, "macro_average needs at least one report");
    }
    EvalReport avg;
    avg.alpha = per_poi.front().alpha;
    for (const EvalReport& r : per_poi) {
        avg.tp_alerts += r.tp_alerts;
        avg.fp_alerts += r.fp_alerts;
        avg.detected_events += r.detected_events;
        avg.missed_events += r.missed_events;
        avg.precision += r.precision;
        avg.recall += r.recall;
        avg.f1 += r.f1;
    }
    const auto n = static_cast<double>(per_poi.size());
    avg.precision /= n;
    avg.recall /= n;
    avg.f1 /= n;
    return avg;
}

std::string alerts_jsonl(const std::vector<AlertRecord>& alerts) {
    std::ostringstream out;
    for (const AlertRecord& alert : alerts) {
        out << "{\"poi_id\": \"" << alert.poi_id << "\", \"timestamp\": \""
            << alert.time.to_string() << "\", \"query_count\": " << alert.query_count
            << ", \"threshold_raw\": " << format_real17(alert.threshold_raw) << "}\n";
    }
    return out.str();
}

} // namespace crowdwarn
