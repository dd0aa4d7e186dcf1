#ifndef CROWDWARN_WARNING_LINES_HPP
#define CROWDWARN_WARNING_LINES_HPP

#include "crowdwarn/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crowdwarn {

inline constexpr int kMinFitDays = 14;
inline constexpr double kDefaultQueryAlpha = 2.0;
inline constexpr double kPositioningAlpha = 3.0;

// Log-space statistics of daily peaks: mu_hat is the mean of ln(peak),
// sigma_hat the unbiased (n-1) sample standard deviation of ln(peak).
// Zero-peak days are excluded before fitting (no ln 0).
struct LogNormalPeakFit {
    int n_days = 0;
    double mu_hat = 0.0;
    double sigma_hat = 0.0;
    int excluded_zero_days = 0;
};

// Threshold mu_hat + alpha * sigma_hat, kept in both log space and raw
// count space; the alert comparison is count >= threshold_raw.
struct WarningLine {
    Signal signal = Signal::MapQuery;
    double alpha = 0.0;
    double threshold_log = 0.0;
    double threshold_raw = 0.0;
};

// Throws Error(insufficient_data) when fewer than min_fit_days nonzero-peak
// days remain; the message carries both counts.
LogNormalPeakFit fit_log_peaks(const DailyPeaks& peaks, int min_fit_days = kMinFitDays);

// Throws Error(invalid_parameter) when alpha <= 0, or when signal is
// Positioning and alpha differs from the fixed value 3.
WarningLine warning_line(const LogNormalPeakFit& fit, double alpha, Signal signal);

bool exceeds(const WarningLine& line, std::int64_t count);

// Fitted line plus provenance, the unit of the warning-lines JSON file.
struct FittedWarningLine {
    std::string poi_id;
    Signal signal = Signal::MapQuery;
    LogNormalPeakFit fit;
    WarningLine line;
};

// JSON array of {poi_id, signal, n_days, mu_hat, sigma_hat, alpha,
// threshold_log, threshold_raw}; reals at 17 significant digits.
std::string warning_lines_json(const std::vector<FittedWarningLine>& lines);
std::vector<FittedWarningLine> warning_lines_from_json(const std::string& json_text);

} // namespace crowdwarn

#endif
