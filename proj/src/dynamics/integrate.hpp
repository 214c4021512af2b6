#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "dynamics/mean_field.hpp"

namespace cfclock::dyn {

class StiffnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Uniformly sampled solution. Sample k sits at t0 + k*dt; derivs hold the
/// vector field at the samples for dense (cubic Hermite) evaluation.
struct Trajectory {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<StateQuad> states;
    std::vector<StateQuad> derivs;

    std::size_t size() const { return states.size(); }
    double time(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
    double t_end() const { return states.empty() ? t0 : time(states.size() - 1); }
    StateQuad at_time(double t) const;
};

enum class IntegrationMethod { rk4, adaptive_rk45 };

struct IntegratorOptions {
    IntegrationMethod method = IntegrationMethod::rk4;
    double dt = 0.0;         // rk4 step; also the output sample spacing
    double abs_tol = 1e-10;  // rk45 only
    double rel_tol = 1e-8;   // rk45 only
};

using RhsFunction = std::function<StateQuad(double, const StateQuad&)>;

/// Integrate ds/dt = f(t, s) on [0, t_end], sampling every opts.dt.
Trajectory integrate(const RhsFunction& f, const StateQuad& s0, double t_end,
                     const IntegratorOptions& opts);

Trajectory integrate(const MeanFieldModel& m, const StateQuad& s0, double t_end,
                     const IntegratorOptions& opts);

} // namespace cfclock::dyn
