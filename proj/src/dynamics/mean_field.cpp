#include "dynamics/mean_field.hpp"

#include <cmath>

namespace cfclock::dyn {

namespace {
const complexd kI{0.0, 1.0};
}

double StateQuad::norm() const {
    return std::sqrt(x_a * x_a + y_a * y_a + x_b * x_b + y_b * y_b);
}

bool StateQuad::finite() const {
    return std::isfinite(x_a) && std::isfinite(y_a) && std::isfinite(x_b) &&
           std::isfinite(y_b);
}

StateQuad operator+(const StateQuad& a, const StateQuad& b) {
    return {a.x_a + b.x_a, a.y_a + b.y_a, a.x_b + b.x_b, a.y_b + b.y_b};
}

StateQuad operator-(const StateQuad& a, const StateQuad& b) {
    return {a.x_a - b.x_a, a.y_a - b.y_a, a.x_b - b.x_b, a.y_b - b.y_b};
}

StateQuad operator*(double s, const StateQuad& a) {
    return {s * a.x_a, s * a.y_a, s * a.x_b, s * a.y_b};
}

double distance(const StateQuad& a, const StateQuad& b) {
    return (a - b).norm();
}

StateQuad rhs(const MeanFieldModel& m, const StateQuad& s) {
    const complexd alpha = s.alpha();
    const complexd beta = s.beta();
    const complexd fa = m.drift_a * alpha - 2.0 * kI * m.kerr_a * std::norm(alpha) * alpha -
                        m.coupling_ab * beta - m.drive_a;
    const complexd fb = m.drift_b * beta - 2.0 * kI * m.kerr_b * std::norm(beta) * beta -
                        m.coupling_ba * alpha - m.drive_b;
    return {fa.real(), fa.imag(), fb.real(), fb.imag()};
}

Eigen::Matrix4d jacobian(const MeanFieldModel& m, const StateQuad& s) {
    Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
    const auto self_block = [](complexd drift, double kerr, double x, double y) {
        Eigen::Matrix2d b;
        b << drift.real() + 4.0 * kerr * x * y,
            -drift.imag() + 2.0 * kerr * (x * x + 3.0 * y * y),
            drift.imag() - 2.0 * kerr * (3.0 * x * x + y * y),
            drift.real() - 4.0 * kerr * x * y;
        return b;
    };
    const auto coupling_block = [](complexd c) {
        Eigen::Matrix2d b;
        b << -c.real(), c.imag(), -c.imag(), -c.real();
        return b;
    };
    j.block<2, 2>(0, 0) = self_block(m.drift_a, m.kerr_a, s.x_a, s.y_a);
    j.block<2, 2>(2, 2) = self_block(m.drift_b, m.kerr_b, s.x_b, s.y_b);
    j.block<2, 2>(0, 2) = coupling_block(m.coupling_ab);
    j.block<2, 2>(2, 0) = coupling_block(m.coupling_ba);
    return j;
}

const char* to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::attractor: return "attractor";
        case StabilityClass::repeller: return "repeller";
        case StabilityClass::saddle: return "saddle";
        case StabilityClass::non_hyperbolic: return "non_hyperbolic";
    }
    return "?";
}

StabilityClass classify(const std::array<complexd, 4>& eigenvalues, double hyperbolic_tol) {
    bool all_pos = true;
    bool all_neg = true;
    for (const auto& ev : eigenvalues) {
        const double re = ev.real();
        if (std::abs(re) <= hyperbolic_tol) {
            return StabilityClass::non_hyperbolic;
        }
        all_pos = all_pos && re > 0.0;
        all_neg = all_neg && re < 0.0;
    }
    if (all_pos) return StabilityClass::repeller;
    if (all_neg) return StabilityClass::attractor;
    return StabilityClass::saddle;
}

MeanFieldModel two_mode_model(const slh::MeanFieldSystem& sys) {
    if (sys.modes.size() != 2) {
        throw std::invalid_argument("two_mode_model: expected a two-mode system");
    }
    MeanFieldModel m;
    m.drift_a = sys.drift(0, 0);
    m.drift_b = sys.drift(1, 1);
    m.coupling_ab = -sys.drift(0, 1);
    m.coupling_ba = -sys.drift(1, 0);
    m.kerr_a = sys.kerr(0);
    m.kerr_b = sys.kerr(1);
    m.drive_a = -sys.drive(0);
    m.drive_b = -sys.drive(1);
    return m;
}

MeanFieldModel coherent_clock_model(const slh::ClockParams& p) {
    return two_mode_model(slh::extract_mean_field(slh::build_clock_network(p).triple));
}

MeanFieldModel mbf_mean_field(const slh::ClockParams& p, double lambda_fb, double phi_fb) {
    p.validate();
    MeanFieldModel m;
    m.drift_a = -(kI * p.delta_a + 0.5 * p.kappa_a());
    m.drift_b = -(kI * p.delta_b + 0.5 * p.kappa_b_eff());
    m.coupling_ab = 2.0 * kI * lambda_fb * std::sqrt(p.kappa_a1 * p.kappa_b2) *
                    std::exp(kI * phi_fb);
    m.coupling_ba = std::sqrt(p.kappa_a1 * p.kappa_b1);
    m.kerr_a = p.kerr_a;
    m.kerr_b = p.kerr_b;
    m.drive_a = kI * p.drive_eps;
    m.drive_b = {0.0, 0.0};
    return m;
}

ReducedCycle reduced_limit_cycle(double g, double kappa, double kerr_a, double kerr_b) {
    if (!(kappa > 0.0)) {
        throw std::invalid_argument("reduced_limit_cycle: kappa must be > 0");
    }
    ReducedCycle out;
    if (g <= kappa / 2.0 || kerr_a == kerr_b) {
        return out;
    }
    out.exists = true;
    out.r_squared = std::sqrt(g * g - kappa * kappa / 4.0) / std::abs(kerr_b - kerr_a);
    out.sin_phi = std::sqrt(1.0 - kappa * kappa / (4.0 * g * g));
    return out;
}

MeanFieldModel reduced_symmetric_model(double g, double kappa, double kerr_a, double kerr_b) {
    MeanFieldModel m;
    m.drift_a = -kappa / 2.0;
    m.drift_b = -kappa / 2.0;
    m.coupling_ab = g;
    m.coupling_ba = g;
    m.kerr_a = kerr_a;
    m.kerr_b = kerr_b;
    return m;
}

} // namespace cfclock::dyn
