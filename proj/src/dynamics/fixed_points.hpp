#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "dynamics/mean_field.hpp"

namespace cfclock::dyn {

struct FixedPointReport {
    StateQuad state;
    std::array<complexd, 4> eigenvalues{};
    StabilityClass cls = StabilityClass::non_hyperbolic;
    double residual = 0.0;
};

struct FixedPointOptions {
    int grid_per_dim = 8;
    double grid_radius = 0.0;     // 0 -> scaled from drive and rates
    double residual_tol = 0.0;    // 0 -> scaled from rates
    double hyperbolic_tol = 0.0;  // 0 -> 1e-6 * max(kappa_a, kappa_b)
    double dedup_tol = 1e-6;
    int max_newton_iters = 80;
    std::vector<StateQuad> seeds; // continuation seeds, tried first
};

double default_hyperbolic_tol(const MeanFieldModel& m);

/// Damped-Newton multi-start search; deduplicated, classified, sorted.
std::vector<FixedPointReport> find_fixed_points(const MeanFieldModel& m,
                                                const FixedPointOptions& opts = {});

struct BranchPoint {
    int branch_id = -1;
    FixedPointReport report;
};

struct ClassTransition {
    int branch_id = -1;
    double eps_sq_before = 0.0;
    double eps_sq_after = 0.0;
    StabilityClass from = StabilityClass::non_hyperbolic;
    StabilityClass to = StabilityClass::non_hyperbolic;
};

struct BifurcationDiagram {
    std::vector<double> eps_sq_grid;
    std::vector<std::vector<BranchPoint>> points; // per grid value
    std::vector<ClassTransition> transitions() const;
};

/// Sweep the drive intensity; fixed points are continuation-seeded from the
/// previous grid value and branches tracked by state-space proximity.
BifurcationDiagram sweep_drive(const std::function<MeanFieldModel(double)>& model_at_eps_sq,
                               const std::vector<double>& eps_sq_grid,
                               const FixedPointOptions& opts = {});

} // namespace cfclock::dyn
