#include "dynamics/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace cfclock::dyn {

namespace {

StateQuad rk4_step(const RhsFunction& f, double t, const StateQuad& s, double h) {
    const StateQuad k1 = f(t, s);
    const StateQuad k2 = f(t + 0.5 * h, s + 0.5 * h * k1);
    const StateQuad k3 = f(t + 0.5 * h, s + 0.5 * h * k2);
    const StateQuad k4 = f(t + h, s + h * k3);
    return s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Dormand-Prince 5(4) pair.
struct Dopri45 {
    StateQuad y5;
    StateQuad y4;
    StateQuad k_last; // FSAL stage
};

Dopri45 dopri_step(const RhsFunction& f, double t, const StateQuad& s, double h,
                   const StateQuad& k1) {
    const StateQuad k2 = f(t + h / 5.0, s + (h / 5.0) * k1);
    const StateQuad k3 = f(t + 3.0 * h / 10.0, s + h * ((3.0 / 40.0) * k1 + (9.0 / 40.0) * k2));
    const StateQuad k4 = f(t + 4.0 * h / 5.0,
                           s + h * ((44.0 / 45.0) * k1 + (-56.0 / 15.0) * k2 + (32.0 / 9.0) * k3));
    const StateQuad k5 =
        f(t + 8.0 * h / 9.0, s + h * ((19372.0 / 6561.0) * k1 + (-25360.0 / 2187.0) * k2 +
                                      (64448.0 / 6561.0) * k3 + (-212.0 / 729.0) * k4));
    const StateQuad k6 =
        f(t + h, s + h * ((9017.0 / 3168.0) * k1 + (-355.0 / 33.0) * k2 + (46732.0 / 5247.0) * k3 +
                          (49.0 / 176.0) * k4 + (-5103.0 / 18656.0) * k5));
    Dopri45 out;
    out.y5 = s + h * ((35.0 / 384.0) * k1 + (500.0 / 1113.0) * k3 + (125.0 / 192.0) * k4 +
                      (-2187.0 / 6784.0) * k5 + (11.0 / 84.0) * k6);
    out.k_last = f(t + h, out.y5);
    out.y4 = s + h * ((5179.0 / 57600.0) * k1 + (7571.0 / 16695.0) * k3 + (393.0 / 640.0) * k4 +
                      (-92097.0 / 339200.0) * k5 + (187.0 / 2100.0) * k6 +
                      (1.0 / 40.0) * out.k_last);
    return out;
}

double error_norm(const StateQuad& y5, const StateQuad& y4, const StateQuad& y_old,
                  double abs_tol, double rel_tol) {
    const double e[4] = {y5.x_a - y4.x_a, y5.y_a - y4.y_a, y5.x_b - y4.x_b, y5.y_b - y4.y_b};
    const double n5[4] = {y5.x_a, y5.y_a, y5.x_b, y5.y_b};
    const double no[4] = {y_old.x_a, y_old.y_a, y_old.x_b, y_old.y_b};
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double sc = abs_tol + rel_tol * std::max(std::abs(n5[i]), std::abs(no[i]));
        const double r = e[i] / sc;
        acc += r * r;
    }
    return std::sqrt(acc / 4.0);
}

} // namespace

StateQuad Trajectory::at_time(double t) const {
    if (states.empty()) {
        throw std::invalid_argument("Trajectory::at_time: empty trajectory");
    }
    if (t <= t0) return states.front();
    if (t >= t_end()) return states.back();
    const double u = (t - t0) / dt;
    const std::size_t k = std::min(static_cast<std::size_t>(u), states.size() - 2);
    const double theta = u - static_cast<double>(k);
    const StateQuad& y0 = states[k];
    const StateQuad& y1 = states[k + 1];
    if (derivs.size() != states.size()) {
        return (1.0 - theta) * y0 + theta * y1;
    }
    // cubic Hermite
    const StateQuad& d0 = derivs[k];
    const StateQuad& d1 = derivs[k + 1];
    const double t2 = theta * theta;
    const double t3 = t2 * theta;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + theta;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y0 + (h10 * dt) * d0 + h01 * y1 + (h11 * dt) * d1;
}

Trajectory integrate(const RhsFunction& f, const StateQuad& s0, double t_end,
                     const IntegratorOptions& opts) {
    if (!(opts.dt > 0.0)) {
        throw std::invalid_argument("integrate: dt must be > 0");
    }
    const auto n_samples = static_cast<std::size_t>(std::llround(t_end / opts.dt));
    Trajectory traj;
    traj.t0 = 0.0;
    traj.dt = opts.dt;
    traj.states.reserve(n_samples + 1);
    traj.derivs.reserve(n_samples + 1);

    StateQuad s = s0;
    traj.states.push_back(s);
    traj.derivs.push_back(f(0.0, s));

    if (opts.method == IntegrationMethod::rk4) {
        for (std::size_t k = 0; k < n_samples; ++k) {
            const double t = static_cast<double>(k) * opts.dt;
            s = rk4_step(f, t, s, opts.dt);
            if (!s.finite()) {
                throw StiffnessError("integrate: state diverged (rk4)");
            }
            traj.states.push_back(s);
            traj.derivs.push_back(f(t + opts.dt, s));
        }
        return traj;
    }

    // adaptive rk45, stepping exactly onto the sample grid
    double h = opts.dt;
    StateQuad k1 = traj.derivs.back();
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double t_target = static_cast<double>(k + 1) * opts.dt;
        double t = static_cast<double>(k) * opts.dt;
        while (t < t_target - 1e-12 * t_end) {
            const double h_try = std::min(h, t_target - t);
            const Dopri45 step = dopri_step(f, t, s, h_try, k1);
            const double err = error_norm(step.y5, step.y4, s, opts.abs_tol, opts.rel_tol);
            if (err <= 1.0) {
                t += h_try;
                s = step.y5;
                k1 = step.k_last;
                if (!s.finite()) {
                    throw StiffnessError("integrate: state diverged (rk45)");
                }
            }
            const double factor = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
            h = std::max(h_try * factor, 1e-300);
            if (h < 1e-6 * opts.dt) {
                throw StiffnessError("integrate: step size underflow (rk45)");
            }
        }
        traj.states.push_back(s);
        traj.derivs.push_back(k1);
    }
    return traj;
}

Trajectory integrate(const MeanFieldModel& m, const StateQuad& s0, double t_end,
                     const IntegratorOptions& opts) {
    return integrate([&m](double, const StateQuad& s) { return rhs(m, s); }, s0, t_end, opts);
}

} // namespace cfclock::dyn
