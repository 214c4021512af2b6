#pragma once

#include <array>
#include <stdexcept>

#include "analysis/spectrum.hpp"

namespace cfclock::analysis {

class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A (gamma/2)^2 / ((f - f0)^2 + (gamma/2)^2) + offset.
struct LorentzianFit {
    double center_hz = 0.0;
    double fwhm_hz = 0.0;
    double amplitude = 0.0;
    double offset = 0.0;
    std::array<double, 4> std_error{}; // center, fwhm, amplitude, offset
    int iterations = 0;
    double ssr = 0.0;

    double evaluate(double f) const {
        const double hw = fwhm_hz / 2.0;
        const double d = f - center_hz;
        return amplitude * hw * hw / (d * d + hw * hw) + offset;
    }
};

/// Levenberg-Marquardt fit of a single peak inside [f_lo, f_hi].
/// Throws FitError with diagnostics after bounded iterations without
/// convergence.
LorentzianFit fit_lorentzian(const EsdResult& esd, double f_lo, double f_hi);

} // namespace cfclock::analysis
