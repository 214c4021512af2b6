#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cfclock::slh {

using complexd = std::complex<double>;

/// Hamiltonian restricted to self-Kerr + quadratic + linear terms,
///   H = sum_m kerr[m] m'^2 m^2 + sum_mn quad(m,n) m' n + sum_m (linear[m] m' + c.c.)
/// which is closed under series, concatenation and feedback for affine-linear
/// collapse operators. All coefficients in rad/s.
struct HamiltonianPoly {
    Eigen::VectorXd kerr;
    Eigen::MatrixXcd quad;
    Eigen::VectorXcd linear;

    HamiltonianPoly() = default;
    explicit HamiltonianPoly(int n_modes)
        : kerr(Eigen::VectorXd::Zero(n_modes)),
          quad(Eigen::MatrixXcd::Zero(n_modes, n_modes)),
          linear(Eigen::VectorXcd::Zero(n_modes)) {}

    int n_modes() const { return static_cast<int>(kerr.size()); }
    bool is_hermitian(double tol = 1e-12) const;
};

/// Affine-linear combination of mode annihilation operators plus a c-number:
/// one entry of the collapse vector.
struct ModeOperator {
    Eigen::VectorXcd coeffs;
    complexd scalar{0.0, 0.0};

    ModeOperator() = default;
    explicit ModeOperator(int n_modes)
        : coeffs(Eigen::VectorXcd::Zero(n_modes)) {}
};

/// An n-port SLH node: scattering matrix S, collapse vector L and
/// Hamiltonian H over an ordered set of mode labels.
struct SlhTriple {
    std::vector<std::string> modes;
    Eigen::MatrixXcd S;
    std::vector<ModeOperator> L;
    HamiltonianPoly H;

    int n_ports() const { return static_cast<int>(S.rows()); }
    int n_modes() const { return static_cast<int>(modes.size()); }

    /// Re-index mode-space data onto a superset of mode labels.
    SlhTriple lifted(const std::vector<std::string>& all_modes) const;
};

class AlgebraicLoopError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// G1 (+) G2: block-diagonal S, stacked L, summed H on the merged mode set.
SlhTriple concatenate(const SlhTriple& g1, const SlhTriple& g2);
SlhTriple concatenate_all(const std::vector<SlhTriple>& gs);

/// G2 <| G1 (signal passes G1 first):
///   (S2 S1, L2 + S2 L1, H1 + H2 + (1/2i)(L2' S2 L1 - h.c.)).
SlhTriple series(const SlhTriple& g2, const SlhTriple& g1);

/// Close the loop from out_port back into in_port, eliminating both.
SlhTriple feedback_reduce(const SlhTriple& g, int out_port, int in_port);

/// Move the c-number parts of L into H (displacement identity
/// D[M+c] = D[M] - i[(i/2)(c* M - c M'), .]); the master equation is
/// unchanged and L becomes purely linear in the modes.
SlhTriple displace_to_hamiltonian(const SlhTriple& g);

// elementary components (Appendix-style building blocks)
SlhTriple make_pad();
SlhTriple make_drive(complexd eps);
SlhTriple make_phase(double phi);
SlhTriple make_beamsplitter(double eta);
SlhTriple make_cavity_port(const std::string& mode, double kappa,
                           double kerr = 0.0, double delta = 0.0);
SlhTriple make_loss_port(const std::string& mode, double kappa_int);

enum class ComponentKind { pad, drive, phase, beamsplitter, cavity_port, loss_port };

struct ComponentParams {
    complexd eps{0.0, 0.0};
    double phi = 0.0;
    double eta = 0.0;
    std::string mode;
    double kappa = 0.0;
    double kerr = 0.0;
    double delta = 0.0;
};

SlhTriple make_component(ComponentKind kind, const ComponentParams& p);

} // namespace cfclock::slh
