#ifndef CROWDWARN_LAG_ANALYTICS_HPP
#define CROWDWARN_LAG_ANALYTICS_HPP

#include "crowdwarn/series.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace crowdwarn {

inline constexpr int kDefaultLagMin = -6;
inline constexpr int kDefaultLagMax = 3;
inline constexpr int kDefaultMiBins = 8;

// Per shared calendar day, lag = hour-of-day(query peak) - hour-of-day
// (positioning peak). Negative means the query peak leads.
struct PeakLagHistogram {
    std::string poi_id;
    std::map<int, int> bins; // lag -> day count
    int n_days = 0;
};

PeakLagHistogram peak_lag_histogram(const DailyPeaks& query_peaks,
                                    const DailyPeaks& positioning_peaks);

struct MiEntry {
    int lag = 0;
    double mi_bits = 0.0;
    int n_pairs = 0;
};

// Plug-in mutual information per lag, in bits, after equal-frequency
// discretization of each marginal into n_bins bins.
struct MiCurve {
    std::string poi_id;
    std::vector<MiEntry> entries; // sorted by lag
    std::vector<int> skipped_lags; // lags with fewer than 10 * n_bins pairs
    int n_bins = 0;
};

// For each lag L in [lag_min, lag_max], pairs (m(t+L), q(t)) over the
// aligned overlap. A constant marginal yields MI 0 for that lag; lags with
// too few pairs are skipped, not errors.
MiCurve mutual_information(const HourlySeries& query, const HourlySeries& positioning,
                           int lag_min, int lag_max, int n_bins);

// Equal-frequency bin assignment with ties resolved by stable order; the
// building block mutual_information discretizes with. Exposed for tests.
std::vector<int> equal_frequency_bins(const std::vector<std::int64_t>& values, int n_bins);

// Plug-in MI in bits of two pre-binned sequences of equal length.
double plugin_mi_bits(const std::vector<int>& a_bins, const std::vector<int>& b_bins,
                      int n_bins);

} // namespace crowdwarn

#endif
