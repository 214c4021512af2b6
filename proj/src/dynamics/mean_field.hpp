#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "slh/clock_network.hpp"

namespace cfclock::dyn {

using complexd = std::complex<double>;

/// Two-mode semiclassical flow
///   d alpha/dt = drift_a alpha - 2i kerr_a |alpha|^2 alpha - coupling_ab beta - drive_a
///   d beta/dt  = drift_b beta  - 2i kerr_b |beta|^2 beta  - coupling_ba alpha - drive_b
/// For the coherent-feedback clock drift_m = -(i Delta + kappa/2), the
/// couplings are g_a e^{i phi_2} and g_b e^{i phi_1}, and the drive is
/// (0, eps_bar).
struct MeanFieldModel {
    complexd drift_a{0.0, 0.0};
    complexd drift_b{0.0, 0.0};
    complexd coupling_ab{0.0, 0.0};
    complexd coupling_ba{0.0, 0.0};
    double kerr_a = 0.0;
    double kerr_b = 0.0;
    complexd drive_a{0.0, 0.0};
    complexd drive_b{0.0, 0.0};

    double kappa_a() const { return -2.0 * drift_a.real(); }
    double kappa_b() const { return -2.0 * drift_b.real(); }
};

/// Field quadratures alpha = x_a + i y_a, beta = x_b + i y_b.
struct StateQuad {
    double x_a = 0.0;
    double y_a = 0.0;
    double x_b = 0.0;
    double y_b = 0.0;

    complexd alpha() const { return {x_a, y_a}; }
    complexd beta() const { return {x_b, y_b}; }
    static StateQuad from_fields(complexd alpha, complexd beta) {
        return {alpha.real(), alpha.imag(), beta.real(), beta.imag()};
    }

    double norm() const;
    bool finite() const;
};

StateQuad operator+(const StateQuad& a, const StateQuad& b);
StateQuad operator-(const StateQuad& a, const StateQuad& b);
StateQuad operator*(double s, const StateQuad& a);
double distance(const StateQuad& a, const StateQuad& b);

/// Quadrature vector field of the model at state s.
StateQuad rhs(const MeanFieldModel& m, const StateQuad& s);

/// Analytic Jacobian d(rhs)/d(x_a, y_a, x_b, y_b).
Eigen::Matrix4d jacobian(const MeanFieldModel& m, const StateQuad& s);

enum class StabilityClass { attractor, repeller, saddle, non_hyperbolic };

const char* to_string(StabilityClass c);

/// Linear-stability taxonomy from the Jacobian eigenvalues: any real part
/// within +-tol of zero is non-hyperbolic; otherwise uniform signs give
/// attractor/repeller and mixed signs a saddle.
StabilityClass classify(const std::array<complexd, 4>& eigenvalues, double hyperbolic_tol);

/// Build the two-mode model from a composed network (modes must be {a, b}).
MeanFieldModel two_mode_model(const slh::MeanFieldSystem& sys);

/// Coherent-feedback clock model via the network composition.
MeanFieldModel coherent_clock_model(const slh::ClockParams& p);

/// Measurement-based-feedback twin: heterodyne currents IQ-modulate the
/// drive of resonator A with gain lambda_fb and phase phi_fb. Uses the
/// paper's effective kappa_b and the bare Delta_b. Matches the coherent
/// flow (drives aside) when lambda_fb e^{i phi_fb} = -i/2 and losses and
/// phases vanish.
MeanFieldModel mbf_mean_field(const slh::ClockParams& p, double lambda_fb, double phi_fb);

/// Closed-form radius and relative phase of the synchronised cycle of the
/// reduced symmetric model (equal kappas, no detuning, no drive). The
/// steady phase satisfies |sin phi| = sin_phi with the sign of
/// (kerr_a - kerr_b).
struct ReducedCycle {
    double r_squared = 0.0;
    double sin_phi = 0.0;
    bool exists = false;
};

ReducedCycle reduced_limit_cycle(double g, double kappa, double kerr_a, double kerr_b);

/// Reduced symmetric model as a MeanFieldModel (for integrating the cycle).
MeanFieldModel reduced_symmetric_model(double g, double kappa, double kerr_a, double kerr_b);

} // namespace cfclock::dyn
