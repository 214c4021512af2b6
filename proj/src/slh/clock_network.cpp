#include "slh/clock_network.hpp"

#include <cmath>

namespace cfclock::slh {

namespace {
const complexd kI{0.0, 1.0};
}

void ClockParams::validate() const {
    const double rates[] = {kappa_a1, kappa_a_int, kappa_b1, kappa_b2, kappa_b_int};
    for (double r : rates) {
        if (!(r >= 0.0)) {
            throw std::invalid_argument("ClockParams: decay rates must be >= 0");
        }
    }
    if (eta1 < 0.0 || eta1 > 1.0 || eta2 < 0.0 || eta2 > 1.0) {
        throw std::invalid_argument("ClockParams: insertion losses must lie in [0, 1]");
    }
}

double ClockParams::kappa_b_eff() const {
    const double t1 = std::sqrt(1.0 - eta1 * eta1);
    const double t2 = std::sqrt(1.0 - eta2 * eta2);
    return kappa_b1 + kappa_b2 + kappa_b_int +
           2.0 * std::sqrt(kappa_b1 * kappa_b2) * t1 * t2 * std::cos(phi1 + phi2);
}

double ClockParams::delta_b_eff() const {
    const double t1 = std::sqrt(1.0 - eta1 * eta1);
    const double t2 = std::sqrt(1.0 - eta2 * eta2);
    return delta_b + std::sqrt(kappa_b1 * kappa_b2) * t1 * t2 * std::sin(phi1 + phi2);
}

double ClockParams::g_a() const {
    return std::sqrt(1.0 - eta2 * eta2) * std::sqrt(kappa_a1 * kappa_b2);
}

double ClockParams::g_b() const {
    return std::sqrt(1.0 - eta1 * eta1) * std::sqrt(kappa_a1 * kappa_b1);
}

complexd ClockParams::eps_bar() const {
    return std::sqrt(1.0 - eta1 * eta1) * std::sqrt(kappa_b1) * drive_eps;
}

SlhTriple build_clock_network_raw(const ClockParams& p) {
    p.validate();
    const SlhTriple pad = make_pad();

    // resonator A chain: cavity port -> phase 1 -> drive insertion -> BS 1
    const SlhTriple block_a = series(
        series(series(concatenate(make_beamsplitter(p.eta1), pad),
                      concatenate_all({make_drive(p.drive_eps), pad, pad})),
               concatenate_all({make_phase(p.phi1), pad, pad})),
        concatenate_all({make_cavity_port("a", p.kappa_a1, p.kerr_a, p.delta_a), pad,
                         make_loss_port("a", p.kappa_a_int)}));

    // resonator B chain: both cavity ports -> phase 2 on port 2 -> BS 2
    const SlhTriple block_b = series(
        series(concatenate_all({pad, make_beamsplitter(p.eta2), pad}),
               concatenate_all({pad, make_phase(p.phi2), pad, pad})),
        concatenate_all({make_cavity_port("b", p.kappa_b1, p.kerr_b, p.delta_b),
                         make_cavity_port("b", p.kappa_b2), pad,
                         make_loss_port("b", p.kappa_b_int)}));

    SlhTriple net = concatenate(block_a, block_b);
    net = feedback_reduce(net, 0, 3); // BS1 through-port into B's drive port
    net = feedback_reduce(net, 3, 0); // BS2 through-port back into A's chain
    return net;
}

ClockNetwork build_clock_network(const ClockParams& p) {
    const SlhTriple raw = build_clock_network_raw(p);
    ClockNetwork net;
    net.port_offsets.resize(raw.n_ports());
    for (int i = 0; i < raw.n_ports(); ++i) {
        net.port_offsets(i) = raw.L[i].scalar;
    }
    net.triple = displace_to_hamiltonian(raw);
    return net;
}

MeanFieldSystem extract_mean_field(const SlhTriple& g) {
    const int nm = g.n_modes();
    Eigen::MatrixXcd coeffs(g.n_ports(), nm);
    Eigen::VectorXcd scalars(g.n_ports());
    for (int i = 0; i < g.n_ports(); ++i) {
        coeffs.row(i) = g.L[i].coeffs.transpose();
        scalars(i) = g.L[i].scalar;
    }

    MeanFieldSystem sys;
    sys.modes = g.modes;
    sys.drift = -kI * g.H.quad - 0.5 * (coeffs.adjoint() * coeffs);
    sys.kerr = g.H.kerr;
    sys.drive = -kI * g.H.linear - 0.5 * (coeffs.adjoint() * scalars);
    return sys;
}

} // namespace cfclock::slh
