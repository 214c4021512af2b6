#pragma once

#include "slh/slh.hpp"

namespace cfclock::slh {

/// Physical parameters of the two-resonator coherent-feedback clock.
/// Rates and detunings are angular (rad/s); eta are insertion-loss
/// amplitudes; drive_eps is the field amplitude in sqrt(photons/s).
struct ClockParams {
    double kappa_a1 = 0.0;
    double kappa_a_int = 0.0;
    double kappa_b1 = 0.0;
    double kappa_b2 = 0.0;
    double kappa_b_int = 0.0;
    double delta_a = 0.0;
    double delta_b = 0.0;
    double kerr_a = 0.0;
    double kerr_b = 0.0;
    double eta1 = 0.0;
    double eta2 = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;
    complexd drive_eps{0.0, 0.0};

    void validate() const;

    double kappa_a() const { return kappa_a1 + kappa_a_int; }
    /// Feedback-dressed decay of resonator B (interference of the two ports).
    double kappa_b_eff() const;
    /// Feedback-dressed detuning of resonator B.
    double delta_b_eff() const;
    double g_a() const;
    double g_b() const;
    /// Effective drive reaching resonator B through the first circulator.
    complexd eps_bar() const;

    ClockParams with_drive(complexd eps) const {
        ClockParams p = *this;
        p.drive_eps = eps;
        return p;
    }
};

/// Composed clock network. `triple` has the c-number drive displaced into
/// the Hamiltonian (L rows purely linear); `port_offsets` keeps the
/// displaced per-row c-numbers, which is what a heterodyne record of an
/// output port sees as the static drive tone.
struct ClockNetwork {
    SlhTriple triple;
    Eigen::VectorXcd port_offsets;

    /// Output routed to the readout chain: the row carrying the field
    /// reflected off resonator B's drive port (third row of the collapse
    /// vector).
    static constexpr int readout_port = 2;
};

/// Assemble the two-beamsplitter / two-phase / three-cavity-port network
/// with both feedback reductions. Modes come out ordered {a, b}.
ClockNetwork build_clock_network(const ClockParams& p);

/// Same composition without the displacement normalization (drive
/// c-numbers still inside L).
SlhTriple build_clock_network_raw(const ClockParams& p);

/// Mean-field flow of a composed network under the coherent-state ansatz:
///   d alpha/dt = drift * alpha - 2i kerr_m |alpha_m|^2 alpha_m + drive_m
/// with drift = -i quad - (1/2) C'C and drive = -i linear - (1/2) C'c.
struct MeanFieldSystem {
    std::vector<std::string> modes;
    Eigen::MatrixXcd drift;
    Eigen::VectorXd kerr;
    Eigen::VectorXcd drive;
};

MeanFieldSystem extract_mean_field(const SlhTriple& g);

} // namespace cfclock::slh
