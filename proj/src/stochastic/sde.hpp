#pragma once

#include <cstdint>
#include <vector>

#include "dynamics/integrate.hpp"

namespace cfclock::sde {

using cfclock::dyn::StateQuad;
using cfclock::dyn::Trajectory;

/// Noisy phase oscillator d theta = omega dt + (sigma/mu) dW.
struct PhaseOscillatorParams {
    double omega = 0.0; // rad/s
    double mu = 0.0;    // amplification rate, 1/s
    double sigma = 0.0; // noise strength; sigma/mu in rad/sqrt(s)

    double noise_amplitude() const { return sigma / mu; }
    /// Phase diffusion sigma^2/mu^2: Lorentzian FWHM in angular frequency.
    double diffusion() const { return (sigma / mu) * (sigma / mu); }
    void validate() const;
};

struct SdeConfig {
    double dt = 0.0;
    std::uint64_t seed = 0;
    int n_paths = 1;
    void validate() const;
};

struct PhasePath {
    double dt = 0.0;
    std::vector<double> theta;
};

/// Euler-Maruyama phase paths; path k is reproducible from (seed, k) alone.
std::vector<PhasePath> simulate_phase(const PhaseOscillatorParams& p, const SdeConfig& cfg,
                                      double t_end);

struct TickSeries {
    std::vector<double> periods; // s
};

/// First passage times of theta through successive 2*pi*k levels, with
/// linear interpolation at the crossing step. Paths are concatenated in
/// path order until n_ticks periods are collected.
TickSeries first_passage_ticks(const PhaseOscillatorParams& p, const SdeConfig& cfg,
                               std::size_t n_ticks);

struct NormalFormPath {
    double dt = 0.0;
    std::vector<double> x;
    std::vector<double> y;
};

/// Hopf normal form dx = [mu x - omega y - r^2 x] dt,
/// dy = [omega x + mu y - r^2 y] dt + sigma dW (noise on y only); the
/// deterministic cycle is the circle of radius sqrt(mu).
NormalFormPath simulate_normal_form(double mu, double omega, double sigma,
                                    const SdeConfig& cfg, double t_end,
                                    double x0, double y0);

/// Classical diffusion added to the quadratures of mode a: the
/// measurement-feedback channel acts at rate gamma, coherent feedback at 0.
struct DiffusionSpec {
    double gamma = 0.0; // 1/s

    static DiffusionSpec coherent() { return {}; }
    static DiffusionSpec mbf(double lambda_fb, double kappa_a1, double kappa_b2) {
        return {lambda_fb * lambda_fb * kappa_a1 * kappa_b2};
    }
};

/// Euler-Maruyama on the mean-field flow with independent additive noise of
/// intensity 2*gamma on x_a and y_a. Path k uses stream (seed, k).
Trajectory simulate_meanfield_sde(const dyn::MeanFieldModel& m, const DiffusionSpec& d,
                                  const SdeConfig& cfg, double t_end, const StateQuad& s0,
                                  int path_index = 0);

/// Wald (inverse Gaussian) density sqrt(lambda/2pi) T^{-3/2}
/// exp(-lambda (T-alpha)^2 / (2 alpha^2 T)).
double wald_pdf(double t, double alpha, double lambda);

/// Wald cumulative distribution (for goodness-of-fit tests).
double wald_cdf(double t, double alpha, double lambda);

} // namespace cfclock::sde
