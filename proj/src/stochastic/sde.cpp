#include "stochastic/sde.hpp"

#include <cmath>
#include <stdexcept>

#include "common/constants.hpp"
#include "common/rng.hpp"

namespace cfclock::sde {

void PhaseOscillatorParams::validate() const {
    if (!(mu > 0.0)) {
        throw std::invalid_argument("PhaseOscillatorParams: mu must be > 0");
    }
    if (sigma < 0.0) {
        throw std::invalid_argument("PhaseOscillatorParams: sigma must be >= 0");
    }
}

void SdeConfig::validate() const {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("SdeConfig: dt must be > 0");
    }
    if (n_paths < 1) {
        throw std::invalid_argument("SdeConfig: n_paths must be >= 1");
    }
}

std::vector<PhasePath> simulate_phase(const PhaseOscillatorParams& p, const SdeConfig& cfg,
                                      double t_end) {
    p.validate();
    cfg.validate();
    const auto n_steps = static_cast<std::size_t>(std::llround(t_end / cfg.dt));
    const double drift = p.omega * cfg.dt;
    const double noise = p.noise_amplitude() * std::sqrt(cfg.dt);

    std::vector<PhasePath> paths(static_cast<std::size_t>(cfg.n_paths));
    for (int k = 0; k < cfg.n_paths; ++k) {
        CounterRng rng(cfg.seed, static_cast<std::uint64_t>(k));
        auto& path = paths[static_cast<std::size_t>(k)];
        path.dt = cfg.dt;
        path.theta.resize(n_steps + 1);
        double theta = 0.0;
        path.theta[0] = theta;
        for (std::size_t i = 1; i <= n_steps; ++i) {
            theta += drift + (noise != 0.0 ? noise * rng.next_gaussian() : 0.0);
            path.theta[i] = theta;
        }
    }
    return paths;
}

TickSeries first_passage_ticks(const PhaseOscillatorParams& p, const SdeConfig& cfg,
                               std::size_t n_ticks) {
    p.validate();
    cfg.validate();
    if (n_ticks < 1) {
        throw std::invalid_argument("first_passage_ticks: n_ticks must be >= 1");
    }
    if (p.omega <= 0.0 && p.sigma == 0.0) {
        throw std::invalid_argument("first_passage_ticks: non-positive drift never crosses");
    }
    const double drift = p.omega * cfg.dt;
    const double noise = p.noise_amplitude() * std::sqrt(cfg.dt);
    // generous cap: 64 expected durations per tick before declaring a stall
    const double expected_period = cfclock::two_pi / std::max(p.omega, 1e-300);
    const std::size_t max_steps_per_tick =
        static_cast<std::size_t>(64.0 * expected_period / cfg.dt) + 64;

    TickSeries out;
    out.periods.reserve(n_ticks);
    for (int path = 0; path < cfg.n_paths && out.periods.size() < n_ticks; ++path) {
        CounterRng rng(cfg.seed, static_cast<std::uint64_t>(path));
        double theta = 0.0;
        double t = 0.0;
        double level = cfclock::two_pi;
        double last_crossing = 0.0;
        std::size_t steps_since_tick = 0;
        while (out.periods.size() < n_ticks) {
            const double theta_prev = theta;
            theta += drift + (noise != 0.0 ? noise * rng.next_gaussian() : 0.0);
            t += cfg.dt;
            ++steps_since_tick;
            while (theta >= level && out.periods.size() < n_ticks) {
                const double frac = (level - theta_prev) / (theta - theta_prev);
                const double t_cross = t - cfg.dt + frac * cfg.dt;
                out.periods.push_back(t_cross - last_crossing);
                last_crossing = t_cross;
                level += cfclock::two_pi;
                steps_since_tick = 0;
            }
            if (steps_since_tick > max_steps_per_tick) {
                throw std::runtime_error("first_passage_ticks: path stalled below next level");
            }
        }
    }
    return out;
}

NormalFormPath simulate_normal_form(double mu, double omega, double sigma,
                                    const SdeConfig& cfg, double t_end, double x0,
                                    double y0) {
    if (!(mu > 0.0)) {
        throw std::invalid_argument("simulate_normal_form: mu must be > 0");
    }
    cfg.validate();
    const auto n_steps = static_cast<std::size_t>(std::llround(t_end / cfg.dt));
    const double noise = sigma * std::sqrt(cfg.dt);

    NormalFormPath path;
    path.dt = cfg.dt;
    path.x.resize(n_steps + 1);
    path.y.resize(n_steps + 1);
    CounterRng rng(cfg.seed, 0);
    double x = x0;
    double y = y0;
    path.x[0] = x;
    path.y[0] = y;
    for (std::size_t i = 1; i <= n_steps; ++i) {
        const double r2 = x * x + y * y;
        const double dx = (mu * x - omega * y - r2 * x) * cfg.dt;
        const double dy = (omega * x + mu * y - r2 * y) * cfg.dt +
                          (noise != 0.0 ? noise * rng.next_gaussian() : 0.0);
        x += dx;
        y += dy;
        path.x[i] = x;
        path.y[i] = y;
    }
    return path;
}

Trajectory simulate_meanfield_sde(const dyn::MeanFieldModel& m, const DiffusionSpec& d,
                                  const SdeConfig& cfg, double t_end, const StateQuad& s0,
                                  int path_index) {
    cfg.validate();
    if (d.gamma < 0.0) {
        throw std::invalid_argument("simulate_meanfield_sde: gamma must be >= 0");
    }
    const auto n_steps = static_cast<std::size_t>(std::llround(t_end / cfg.dt));
    const double noise = std::sqrt(2.0 * d.gamma) * std::sqrt(cfg.dt);

    Trajectory traj;
    traj.t0 = 0.0;
    traj.dt = cfg.dt;
    traj.states.reserve(n_steps + 1);
    CounterRng rng(cfg.seed, static_cast<std::uint64_t>(path_index));
    StateQuad s = s0;
    traj.states.push_back(s);
    for (std::size_t i = 1; i <= n_steps; ++i) {
        const StateQuad f = dyn::rhs(m, s);
        s = s + cfg.dt * f;
        if (noise != 0.0) {
            s.x_a += noise * rng.next_gaussian();
            s.y_a += noise * rng.next_gaussian();
        }
        if (!s.finite()) {
            throw dyn::StiffnessError("simulate_meanfield_sde: state diverged");
        }
        traj.states.push_back(s);
    }
    return traj;
}

double wald_pdf(double t, double alpha, double lambda) {
    if (!(t > 0.0) || !(alpha > 0.0) || !(lambda > 0.0)) {
        throw std::invalid_argument("wald_pdf: arguments must be positive");
    }
    const double dev = t - alpha;
    return std::sqrt(lambda / cfclock::two_pi) * std::pow(t, -1.5) *
           std::exp(-lambda * dev * dev / (2.0 * alpha * alpha * t));
}

double wald_cdf(double t, double alpha, double lambda) {
    if (!(alpha > 0.0) || !(lambda > 0.0)) {
        throw std::invalid_argument("wald_cdf: parameters must be positive");
    }
    if (!(t > 0.0)) return 0.0;
    const auto phi = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
    const double s = std::sqrt(lambda / t);
    return phi(s * (t / alpha - 1.0)) +
           std::exp(2.0 * lambda / alpha) * phi(-s * (t / alpha + 1.0));
}

} // namespace cfclock::sde
