#include "crowdwarn/warning_lines.hpp"

#include "crowdwarn/errors.hpp"
#include "crowdwarn/io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace crowdwarn {

LogNormalPeakFit fit_log_peaks(const DailyPeaks& peaks, int min_fit_days) {
    if (min_fit_days < 2) {
        throw Error(ErrorCode::invalid_parameter, "min_fit_days must be >= 2");
    }
    std::vector<double> logs;
    logs.reserve(peaks.entries.size());
    int excluded = 0;
    for (const DailyPeakEntry& entry : peaks.entries) {
        if (entry.peak == 0) {
            ++excluded;
        } else {
            logs.push_back(std::log(static_cast<double>(entry.peak)));
        }
    }
    const int n = static_cast<int>(logs.size());
    if (n < min_fit_days) {
        throw Error(ErrorCode::insufficient_data,
                    "POI " + peaks.poi_id + ": " + std::to_string(n) +
                        " valid days after excluding " + std::to_string(excluded) +
                        " zero-peak days; need at least " + std::to_string(min_fit_days));
    }

    double mean = 0.0;
    for (double v : logs) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : logs) {
        const double d = v - mean;
        ss += d * d;
    }

    LogNormalPeakFit fit;
    fit.n_days = n;
    fit.mu_hat = mean;
    fit.sigma_hat = std::sqrt(ss / static_cast<double>(n - 1));
    fit.excluded_zero_days = excluded;
    return fit;
}

WarningLine warning_line(const LogNormalPeakFit& fit, double alpha, Signal signal) {
    if (!(alpha > 0.0)) {
        throw Error(ErrorCode::invalid_parameter,
                    "alpha must be positive, got " + format_real17(alpha));
    }
    if (signal == Signal::Positioning && alpha != kPositioningAlpha) {
        throw Error(ErrorCode::invalid_parameter,
                    "the positioning warning line uses the fixed alpha 3, got " +
                        format_real17(alpha));
    }
    WarningLine line;
    line.signal = signal;
    line.alpha = alpha;
    line.threshold_log = fit.mu_hat + alpha * fit.sigma_hat;
    line.threshold_raw = std::exp(line.threshold_log);
    return line;
}

bool exceeds(const WarningLine& line, std::int64_t count) {
    return static_cast<double>(count) >= line.threshold_raw;
}

std::string warning_lines_json(const std::vector<FittedWarningLine>& lines) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const FittedWarningLine& l = lines[i];
        out << "  {\"poi_id\": \"" << l.poi_id << "\", \"signal\": \"" << signal_name(l.signal)
            << "\", \"n_days\": " << l.fit.n_days
            << ", \"mu_hat\": " << format_real17(l.fit.mu_hat)
            << ", \"sigma_hat\": " << format_real17(l.fit.sigma_hat)
            << ", \"alpha\": " << format_real17(l.line.alpha)
            << ", \"threshold_log\": " << format_real17(l.line.threshold_log)
            << ", \"threshold_raw\": " << format_real17(l.line.threshold_raw) << "}";
        if (i + 1 < lines.size()) out << ',';
        out << '\n';
    }
    out << "]\n";
    return out.str();
}

std::vector<FittedWarningLine> warning_lines_from_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::data_error, std::string("bad warning-lines JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw Error(ErrorCode::data_error, "warning-lines JSON must be an array");
    }
    std::vector<FittedWarningLine> lines;
    try {
        for (const auto& item : doc) {
            FittedWarningLine l;
            l.poi_id = item.at("poi_id").get<std::string>();
            const std::string sig = item.at("signal").get<std::string>();
            if (sig == "query") {
                l.signal = Signal::MapQuery;
            } else if (sig == "positioning") {
                l.signal = Signal::Positioning;
            } else {
                throw Error(ErrorCode::data_error, "unknown signal '" + sig + "'");
            }
            l.fit.n_days = item.at("n_days").get<int>();
            l.fit.mu_hat = item.at("mu_hat").get<double>();
            l.fit.sigma_hat = item.at("sigma_hat").get<double>();
            l.line.signal = l.signal;
            l.line.alpha = item.at("alpha").get<double>();
            l.line.threshold_log = item.at("threshold_log").get<double>();
            l.line.threshold_raw = item.at("threshold_raw").get<double>();
            lines.push_back(std::move(l));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::data_error,
                    std::string("warning-lines JSON missing field: ") + e.what());
    }
    return lines;
}

} // namespace crowdwarn
