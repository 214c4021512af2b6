#pragma once

#include <cmath>

namespace cfclock {

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// CODATA 2018 values. Overridable where unit-system tests need it.
struct PhysicalConstants {
    double hbar = 1.054571817e-34;        // J s
    double flux_quantum = 2.067833848e-15; // Wb

    double reduced_flux_quantum() const { return flux_quantum / two_pi; }
};

/// Frequencies in configs and reports are nu = omega/2pi (Hz); the model
/// works in angular units (rad/s) throughout.
inline double hz_to_angular(double nu_hz) { return two_pi * nu_hz; }
inline double angular_to_hz(double omega) { return omega / two_pi; }

} // namespace cfclock
