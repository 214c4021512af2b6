#include "dynamics/limit_cycle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cfclock::dyn {

std::vector<double> mean_crossing_times(const std::vector<double>& values, double t0,
                                        double dt) {
    std::vector<double> out;
    if (values.size() < 3) return out;
    const double mean =
        std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    for (std::size_t k = 1; k < values.size(); ++k) {
        const double prev = values[k - 1] - mean;
        const double cur = values[k] - mean;
        if (prev < 0.0 && cur >= 0.0) {
            const double frac = -prev / (cur - prev);
            out.push_back(t0 + (static_cast<double>(k - 1) + frac) * dt);
        }
    }
    return out;
}

std::optional<LimitCycleInfo> detect_limit_cycle(const Trajectory& traj, double transient,
                                                 const LimitCycleOptions& opts) {
    if (traj.size() < 3 || !(traj.dt > 0.0)) return std::nullopt;
    const auto first =
        static_cast<std::size_t>(std::max(0.0, std::ceil((transient - traj.t0) / traj.dt)));
    if (first + 16 >= traj.size()) return std::nullopt;

    std::vector<double> mag_a;
    std::vector<double> mag_b;
    mag_a.reserve(traj.size() - first);
    mag_b.reserve(traj.size() - first);
    StateQuad mean_state{};
    for (std::size_t k = first; k < traj.size(); ++k) {
        mag_a.push_back(std::abs(traj.states[k].alpha()));
        mag_b.push_back(std::abs(traj.states[k].beta()));
        mean_state = mean_state + traj.states[k];
    }
    const double n = static_cast<double>(mag_a.size());
    mean_state = (1.0 / n) * mean_state;

    const auto [a_min, a_max] = std::minmax_element(mag_a.begin(), mag_a.end());
    const double ptp_a = *a_max - *a_min;
    if (ptp_a <= opts.amplitude_threshold_rel * std::max(*a_max, 1e-300)) {
        return std::nullopt; // converged to a fixed point
    }

    const double t_first = traj.time(first);
    const auto crossings = mean_crossing_times(mag_a, t_first, traj.dt);
    if (crossings.size() < opts.min_crossings) return std::nullopt;

    std::vector<double> intervals(crossings.size() - 1);
    for (std::size_t k = 1; k < crossings.size(); ++k) {
        intervals[k - 1] = crossings[k] - crossings[k - 1];
    }
    const double mean_t =
        std::accumulate(intervals.begin(), intervals.end(), 0.0) / static_cast<double>(intervals.size());
    double var = 0.0;
    for (double x : intervals) var += (x - mean_t) * (x - mean_t);
    var /= static_cast<double>(intervals.size());
    if (std::sqrt(var) > opts.period_spread_rel * mean_t) {
        return std::nullopt; // not a clean single-period oscillation
    }

    LimitCycleInfo info;
    info.period = mean_t;
    info.frequency = 1.0 / mean_t;
    info.amplitude_a = ptp_a;
    const auto [b_min, b_max] = std::minmax_element(mag_b.begin(), mag_b.end());
    info.amplitude_b = *b_max - *b_min;
    info.mean_point = mean_state;
    return info;
}

} // namespace cfclock::dyn
