#include "crowdwarn/lag_analytics.hpp"

#include "crowdwarn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace crowdwarn {

PeakLagHistogram peak_lag_histogram(const DailyPeaks& query_peaks,
                                    const DailyPeaks& positioning_peaks) {
    if (query_peaks.poi_id != positioning_peaks.poi_id) {
        throw Error(ErrorCode::invalid_parameter,
                    "peak-lag histogram needs peaks from the same POI");
    }
    if (query_peaks.signal != Signal::MapQuery ||
        positioning_peaks.signal != Signal::Positioning) {
        throw Error(ErrorCode::invalid_parameter,
                    "peak-lag histogram needs query peaks and positioning peaks, in that order");
    }

    PeakLagHistogram hist;
    hist.poi_id = query_peaks.poi_id;

    std::size_t qi = 0, pi = 0;
    while (qi < query_peaks.entries.size() && pi < positioning_peaks.entries.size()) {
        const DailyPeakEntry& q = query_peaks.entries[qi];
        const DailyPeakEntry& p = positioning_peaks.entries[pi];
        if (q.date < p.date) {
            ++qi;
        } else if (p.date < q.date) {
            ++pi;
        } else {
            const int lag = q.peak_hour.hour_of_day() - p.peak_hour.hour_of_day();
            ++hist.bins[lag];
            ++hist.n_days;
            ++qi;
            ++pi;
        }
    }

    if (hist.n_days == 0) {
        throw Error(ErrorCode::insufficient_data,
                    "POI " + query_peaks.poi_id + ": no days shared by both peak sets");
    }
    return hist;
}

std::vector<int> equal_frequency_bins(const std::vector<std::int64_t>& values, int n_bins) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    // stable sort by value: tied counts keep their original order, so the
    // discretization is deterministic
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<int> bins(n);
    for (std::size_t rank = 0; rank < n; ++rank) {
        bins[order[rank]] = static_cast<int>(rank * static_cast<std::size_t>(n_bins) / n);
    }
    return bins;
}

double plugin_mi_bits(const std::vector<int>& a_bins, const std::vector<int>& b_bins,
                      int n_bins) {
    const std::size_t n = a_bins.size();
    const auto k = static_cast<std::size_t>(n_bins);
    std::vector<std::int64_t> joint(k * k, 0);
    std::vector<std::int64_t> row(k, 0), col(k, 0);
    for (std::size_t t = 0; t < n; ++t) {
        const auto i = static_cast<std::size_t>(a_bins[t]);
        const auto j = static_cast<std::size_t>(b_bins[t]);
        ++joint[i * k + j];
        ++row[i];
        ++col[j];
    }
    double mi = 0.0;
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const std::int64_t c = joint[i * k + j];
            if (c == 0) continue;
            const double p = static_cast<double>(c) / dn;
            const double ratio = (static_cast<double>(c) * dn) /
                                 (static_cast<double>(row[i]) * static_cast<double>(col[j]));
            mi += p * std::log2(ratio);
        }
    }
    return std::max(mi, 0.0);
}

MiCurve mutual_information(const HourlySeries& query, const HourlySeries& positioning,
                           int lag_min, int lag_max, int n_bins) {
    if (n_bins < 2) {
        throw Error(ErrorCode::invalid_parameter,
                    "mutual information needs n_bins >= 2, got " + std::to_string(n_bins));
    }
    if (lag_min > lag_max) {
        throw Error(ErrorCode::invalid_parameter, "lag range is empty");
    }
    if (query.signal != Signal::MapQuery || positioning.signal != Signal::Positioning) {
        throw Error(ErrorCode::invalid_parameter,
                    "mutual_information needs a query series and a positioning series");
    }

    const AlignedSeries aligned = align(query, positioning);
    const auto n = static_cast<std::int64_t>(aligned.a.size());

    MiCurve curve;
    curve.poi_id = query.poi_id;
    curve.n_bins = n_bins;

    const std::int64_t min_pairs = 10LL * n_bins;
    for (int lag = lag_min; lag <= lag_max; ++lag) {
        const std::int64_t n_pairs = n - std::abs(static_cast<std::int64_t>(lag));
        if (n_pairs < min_pairs) {
            curve.skipped_lags.push_back(lag);
            continue;
        }
        // pairs (m(t+lag), q(t)) over t with both indices in range
        const std::int64_t t0 = std::max<std::int64_t>(0, -lag);
        std::vector<std::int64_t> m_vals, q_vals;
        m_vals.reserve(static_cast<std::size_t>(n_pairs));
        q_vals.reserve(static_cast<std::size_t>(n_pairs));
        for (std::int64_t t = t0; t < t0 + n_pairs; ++t) {
            m_vals.push_back(aligned.a[static_cast<std::size_t>(t + lag)]);
            q_vals.push_back(aligned.b[static_cast<std::size_t>(t)]);
        }

        MiEntry entry;
        entry.lag = lag;
        entry.n_pairs = static_cast<int>(n_pairs);

        const bool m_const =
            std::all_of(m_vals.begin(), m_vals.end(),
                        [&](std::int64_t v) { return v == m_vals.front(); });
        const bool q_const =
            std::all_of(q_vals.begin(), q_vals.end(),
                        [&](std::int64_t v) { return v == q_vals.front(); });
        if (m_const || q_const) {
            entry.mi_bits = 0.0; // degenerate marginal carries no information
        } else {
            const std::vector<int> m_bins = equal_frequency_bins(m_vals, n_bins);
            const std::vector<int> q_bins = equal_frequency_bins(q_vals, n_bins);
            entry.mi_bits = plugin_mi_bits(m_bins, q_bins, n_bins);
        }
        curve.entries.push_back(entry);
    }
    return curve;
}

} // namespace crowdwarn
