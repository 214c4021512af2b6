#include "dynamics/fixed_points.hpp"

#include <algorithm>
#include <cmath>

namespace cfclock::dyn {

namespace {

double rate_scale(const MeanFieldModel& m) {
    return std::max({std::abs(m.drift_a), std::abs(m.drift_b), std::abs(m.coupling_ab),
                     std::abs(m.coupling_ba), 1.0});
}

double amplitude_scale(const MeanFieldModel& m) {
    const double drive = std::max(std::abs(m.drive_a), std::abs(m.drive_b));
    const double kappa = std::max({m.kappa_a(), m.kappa_b(), 1e-300});
    double scale = 1.0;
    if (drive > 0.0) {
        scale = std::max(scale, std::sqrt(drive / kappa));
        const double kerr = std::max(std::abs(m.kerr_a), std::abs(m.kerr_b));
        if (kerr > 0.0) {
            scale = std::max(scale, std::cbrt(drive / (2.0 * kerr)));
        }
        scale = std::max(scale, drive / std::max(std::abs(m.drift_b), 1e-300));
    }
    return scale;
}

struct NewtonOutcome {
    StateQuad x;
    double residual = 0.0;
    bool converged = false;
};

Eigen::Vector4d as_vec(const StateQuad& s) {
    return {s.x_a, s.y_a, s.x_b, s.y_b};
}

StateQuad as_state(const Eigen::Vector4d& v) {
    return {v(0), v(1), v(2), v(3)};
}

NewtonOutcome newton_solve(const MeanFieldModel& m, const StateQuad& x0, double tol,
                           int max_iters) {
    NewtonOutcome out;
    Eigen::Vector4d x = as_vec(x0);
    Eigen::Vector4d f = as_vec(rhs(m, as_state(x)));
    double fn = f.norm();
    for (int it = 0; it < max_iters; ++it) {
        if (fn <= tol) break;
        const Eigen::Matrix4d j = jacobian(m, as_state(x));
        const Eigen::Vector4d dx = j.partialPivLu().solve(-f);
        if (!dx.allFinite()) break;
        double step = 1.0;
        Eigen::Vector4d x_next = x + dx;
        Eigen::Vector4d f_next = as_vec(rhs(m, as_state(x_next)));
        for (int halving = 0; halving < 40 && !(f_next.norm() < fn); ++halving) {
            step *= 0.5;
            x_next = x + step * dx;
            f_next = as_vec(rhs(m, as_state(x_next)));
        }
        if (!(f_next.norm() < fn)) break; // stagnated
        x = x_next;
        f = f_next;
        fn = f.norm();
    }
    out.x = as_state(x);
    out.residual = fn;
    out.converged = fn <= tol;
    return out;
}

FixedPointReport make_report(const MeanFieldModel& m, const StateQuad& x, double residual,
                             double hyperbolic_tol) {
    FixedPointReport r;
    r.state = x;
    r.residual = residual;
    const Eigen::Matrix4d j = jacobian(m, x);
    Eigen::EigenSolver<Eigen::Matrix4d> es(j);
    std::array<complexd, 4> eigs;
    for (int i = 0; i < 4; ++i) eigs[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    std::sort(eigs.begin(), eigs.end(), [](complexd a, complexd b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    r.eigenvalues = eigs;
    r.cls = classify(eigs, hyperbolic_tol);
    return r;
}

} // namespace

double default_hyperbolic_tol(const MeanFieldModel& m) {
    return 1e-6 * std::max({m.kappa_a(), m.kappa_b(), 1.0});
}

std::vector<FixedPointReport> find_fixed_points(const MeanFieldModel& m,
                                                const FixedPointOptions& opts) {
    const double radius =
        opts.grid_radius > 0.0 ? opts.grid_radius : 3.0 * amplitude_scale(m);
    const double tol =
        opts.residual_tol > 0.0 ? opts.residual_tol
                                : 1e-9 * rate_scale(m) * std::max(1.0, radius);
    const double htol =
        opts.hyperbolic_tol > 0.0 ? opts.hyperbolic_tol : default_hyperbolic_tol(m);

    std::vector<StateQuad> starts;
    starts.push_back({});
    for (const auto& s : opts.seeds) starts.push_back(s);
    const int n = std::max(opts.grid_per_dim, 1);
    std::vector<double> axis(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        axis[static_cast<std::size_t>(i)] =
            n == 1 ? 0.0 : -radius + 2.0 * radius * static_cast<double>(i) / (n - 1);
    }
    for (double xa : axis)
        for (double ya : axis)
            for (double xb : axis)
                for (double yb : axis) starts.push_back({xa, ya, xb, yb});

    std::vector<FixedPointReport> found;
    for (const auto& s0 : starts) {
        const NewtonOutcome sol = newton_solve(m, s0, tol, opts.max_newton_iters);
        if (!sol.converged || !sol.x.finite()) continue;
        bool duplicate = false;
        for (const auto& r : found) {
            if (distance(r.state, sol.x) < opts.dedup_tol) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            found.push_back(make_report(m, sol.x, sol.residual, htol));
        }
    }
    std::sort(found.begin(), found.end(), [](const FixedPointReport& a, const FixedPointReport& b) {
        const double na = std::norm(a.state.alpha()) + std::norm(a.state.beta());
        const double nb = std::norm(b.state.alpha()) + std::norm(b.state.beta());
        return na < nb;
    });
    return found;
}

std::vector<ClassTransition> BifurcationDiagram::transitions() const {
    std::vector<ClassTransition> out;
    for (std::size_t k = 1; k < points.size(); ++k) {
        for (const auto& cur : points[k]) {
            for (const auto& prev : points[k - 1]) {
                if (prev.branch_id == cur.branch_id && prev.report.cls != cur.report.cls) {
                    out.push_back({cur.branch_id, eps_sq_grid[k - 1], eps_sq_grid[k],
                                   prev.report.cls, cur.report.cls});
                }
            }
        }
    }
    return out;
}

BifurcationDiagram sweep_drive(const std::function<MeanFieldModel(double)>& model_at_eps_sq,
                               const std::vector<double>& eps_sq_grid,
                               const FixedPointOptions& opts) {
    for (std::size_t k = 1; k < eps_sq_grid.size(); ++k) {
        if (!(eps_sq_grid[k] >= eps_sq_grid[k - 1])) {
            throw std::invalid_argument("sweep_drive: grid must be monotone");
        }
    }

    BifurcationDiagram diagram;
    diagram.eps_sq_grid = eps_sq_grid;
    diagram.points.resize(eps_sq_grid.size());

    int next_branch_id = 0;
    std::vector<BranchPoint> prev;
    for (std::size_t k = 0; k < eps_sq_grid.size(); ++k) {
        FixedPointOptions local = opts;
        for (const auto& bp : prev) local.seeds.push_back(bp.report.state);
        const MeanFieldModel m = model_at_eps_sq(eps_sq_grid[k]);
        const auto reports = find_fixed_points(m, local);

        std::vector<BranchPoint>& here = diagram.points[k];
        std::vector<bool> prev_taken(prev.size(), false);
        for (const auto& r : reports) {
            // nearest unclaimed predecessor within a continuity window
            int best = -1;
            double best_d = std::numeric_limits<double>::max();
            for (std::size_t p = 0; p < prev.size(); ++p) {
                if (prev_taken[p]) continue;
                const double d = distance(prev[p].report.state, r.state);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(p);
                }
            }
            const double window =
                0.2 * std::max(1.0, r.state.norm() + (best >= 0 ? prev[static_cast<std::size_t>(best)].report.state.norm() : 0.0));
            BranchPoint bp;
            bp.report = r;
            if (best >= 0 && best_d < window) {
                bp.branch_id = prev[static_cast<std::size_t>(best)].branch_id;
                prev_taken[static_cast<std::size_t>(best)] = true;
            } else {
                bp.branch_id = next_branch_id++;
            }
            here.push_back(bp);
        }
        prev = here;
    }
    return diagram;
}

} // namespace cfclock::dyn
