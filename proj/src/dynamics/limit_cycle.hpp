#pragma once

#include <optional>
#include <vector>

#include "dynamics/integrate.hpp"

namespace cfclock::dyn {

struct LimitCycleInfo {
    double period = 0.0;    // s
    double frequency = 0.0; // Hz
    double amplitude_a = 0.0; // peak-to-peak of |alpha|
    double amplitude_b = 0.0; // peak-to-peak of |beta|
    StateQuad mean_point;
};

struct LimitCycleOptions {
    double amplitude_threshold_rel = 1e-3; // vs max |alpha|
    double period_spread_rel = 1e-2;
    std::size_t min_crossings = 8;
};

/// Upward mean-crossing times of a sampled scalar series (linear
/// interpolation between samples).
std::vector<double> mean_crossing_times(const std::vector<double>& values, double t0,
                                        double dt);

/// Detect a sustained oscillation after discarding `transient` seconds:
/// requires the peak-to-peak of |alpha(t)| to exceed the threshold and the
/// crossing intervals to agree to within the allowed spread. Returns
/// nothing when the trajectory has settled onto a fixed point.
std::optional<LimitCycleInfo> detect_limit_cycle(const Trajectory& traj, double transient,
                                                 const LimitCycleOptions& opts = {});

} // namespace cfclock::dyn
