#include "slh/slh.hpp"

#include <algorithm>
#include <cmath>

namespace cfclock::slh {

namespace {

const complexd kI{0.0, 1.0};

std::vector<std::string> merge_modes(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& m : b) {
        if (std::find(out.begin(), out.end(), m) == out.end()) {
            out.push_back(m);
        }
    }
    return out;
}

// L rows as (scalar vector, coefficient matrix): C(i, m) = coefficient of
// mode m in row i.
struct StackedL {
    Eigen::VectorXcd c;
    Eigen::MatrixXcd C;
};

StackedL stack_l(const SlhTriple& g) {
    StackedL out;
    out.c.resize(g.n_ports());
    out.C.resize(g.n_ports(), g.n_modes());
    for (int i = 0; i < g.n_ports(); ++i) {
        out.c(i) = g.L[i].scalar;
        out.C.row(i) = g.L[i].coeffs.transpose();
    }
    return out;
}

std::vector<ModeOperator> unstack_l(const StackedL& s) {
    std::vector<ModeOperator> out(s.c.size());
    for (int i = 0; i < s.c.size(); ++i) {
        out[i].scalar = s.c(i);
        out[i].coeffs = s.C.row(i).transpose();
    }
    return out;
}

// Hermitian part of the series/feedback correction (1/2i)(X - X'), where
// X = c_const + ann.n + cre.m' + m' A n after normal ordering. The purely
// real constant is an energy shift and is dropped.
void add_antihermitian_correction(HamiltonianPoly& h, const Eigen::MatrixXcd& a,
                                  const Eigen::VectorXcd& cre,
                                  const Eigen::VectorXcd& ann) {
    const complexd inv2i = 1.0 / (2.0 * kI);
    h.quad += inv2i * (a - a.adjoint());
    h.linear += inv2i * (cre - ann.conjugate());
}

} // namespace

bool HamiltonianPoly::is_hermitian(double tol) const {
    return (quad - quad.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

SlhTriple SlhTriple::lifted(const std::vector<std::string>& all_modes) const {
    const int nm = static_cast<int>(all_modes.size());
    std::vector<int> idx(modes.size());
    for (std::size_t k = 0; k < modes.size(); ++k) {
        auto it = std::find(all_modes.begin(), all_modes.end(), modes[k]);
        if (it == all_modes.end()) {
            throw std::invalid_argument("lifted: mode set is not a superset");
        }
        idx[k] = static_cast<int>(it - all_modes.begin());
    }

    SlhTriple out;
    out.modes = all_modes;
    out.S = S;
    out.H = HamiltonianPoly(nm);
    for (std::size_t k = 0; k < modes.size(); ++k) {
        out.H.kerr(idx[k]) = H.kerr(static_cast<int>(k));
        out.H.linear(idx[k]) = H.linear(static_cast<int>(k));
        for (std::size_t l = 0; l < modes.size(); ++l) {
            out.H.quad(idx[k], idx[l]) = H.quad(static_cast<int>(k), static_cast<int>(l));
        }
    }
    out.L.assign(L.size(), ModeOperator(nm));
    for (std::size_t i = 0; i < L.size(); ++i) {
        out.L[i].scalar = L[i].scalar;
        for (std::size_t k = 0; k < modes.size(); ++k) {
            out.L[i].coeffs(idx[k]) = L[i].coeffs(static_cast<int>(k));
        }
    }
    return out;
}

SlhTriple concatenate(const SlhTriple& g1, const SlhTriple& g2) {
    const auto modes = merge_modes(g1.modes, g2.modes);
    const SlhTriple a = g1.lifted(modes);
    const SlhTriple b = g2.lifted(modes);
    const int n1 = a.n_ports();
    const int n2 = b.n_ports();

    SlhTriple out;
    out.modes = modes;
    out.S = Eigen::MatrixXcd::Zero(n1 + n2, n1 + n2);
    out.S.topLeftCorner(n1, n1) = a.S;
    out.S.bottomRightCorner(n2, n2) = b.S;
    out.L = a.L;
    out.L.insert(out.L.end(), b.L.begin(), b.L.end());
    out.H = HamiltonianPoly(static_cast<int>(modes.size()));
    out.H.kerr = a.H.kerr + b.H.kerr;
    out.H.quad = a.H.quad + b.H.quad;
    out.H.linear = a.H.linear + b.H.linear;
    return out;
}

SlhTriple concatenate_all(const std::vector<SlhTriple>& gs) {
    if (gs.empty()) {
        throw std::invalid_argument("concatenate_all: empty list");
    }
    SlhTriple out = gs.front();
    for (std::size_t i = 1; i < gs.size(); ++i) {
        out = concatenate(out, gs[i]);
    }
    return out;
}

SlhTriple series(const SlhTriple& g2, const SlhTriple& g1) {
    if (g1.n_ports() != g2.n_ports()) {
        throw std::invalid_argument("series: port counts differ");
    }
    const auto modes = merge_modes(g1.modes, g2.modes);
    const SlhTriple a = g1.lifted(modes);
    const SlhTriple b = g2.lifted(modes);
    const auto l1 = stack_l(a);
    const auto l2 = stack_l(b);

    SlhTriple out;
    out.modes = modes;
    out.S = b.S * a.S;
    StackedL lo;
    lo.c = l2.c + b.S * l1.c;
    lo.C = l2.C + b.S * l1.C;
    out.L = unstack_l(lo);

    out.H = HamiltonianPoly(static_cast<int>(modes.size()));
    out.H.kerr = a.H.kerr + b.H.kerr;
    out.H.quad = a.H.quad + b.H.quad;
    out.H.linear = a.H.linear + b.H.linear;
    // X = L2' S2 L1, normal ordered
    const Eigen::MatrixXcd corr = l2.C.adjoint() * b.S * l1.C;
    const Eigen::VectorXcd cre = l2.C.adjoint() * b.S * l1.c;
    const Eigen::VectorXcd ann = (l2.c.adjoint() * b.S * l1.C).transpose();
    add_antihermitian_correction(out.H, corr, cre, ann);
    return out;
}

SlhTriple feedback_reduce(const SlhTriple& g, int out_port, int in_port) {
    const int n = g.n_ports();
    if (out_port < 0 || out_port >= n || in_port < 0 || in_port >= n) {
        throw std::invalid_argument("feedback_reduce: port index out of range");
    }
    const complexd s = g.S(out_port, in_port);
    if (std::abs(1.0 - s) <= 1e-9) {
        throw AlgebraicLoopError("feedback_reduce: singular loop, |1 - S(x,y)| below tolerance");
    }
    const complexd w = 1.0 / (1.0 - s);
    const auto l = stack_l(g);

    std::vector<int> keep_rows;
    std::vector<int> keep_cols;
    for (int i = 0; i < n; ++i) {
        if (i != out_port) keep_rows.push_back(i);
        if (i != in_port) keep_cols.push_back(i);
    }

    SlhTriple out;
    out.modes = g.modes;
    out.S.resize(n - 1, n - 1);
    StackedL lo;
    lo.c.resize(n - 1);
    lo.C.resize(n - 1, g.n_modes());
    for (int r = 0; r < n - 1; ++r) {
        const int i = keep_rows[r];
        for (int cidx = 0; cidx < n - 1; ++cidx) {
            const int j = keep_cols[cidx];
            out.S(r, cidx) = g.S(i, j) + g.S(i, in_port) * w * g.S(out_port, j);
        }
        lo.c(r) = l.c(i) + g.S(i, in_port) * w * l.c(out_port);
        lo.C.row(r) = l.C.row(i) + g.S(i, in_port) * w * l.C.row(out_port);
    }
    out.L = unstack_l(lo);

    out.H = g.H;
    // X = (sum_j L_j' S(j, in)) w L_out; the bracket is conj(caux) + vaux.m'
    const Eigen::VectorXcd u = g.S.col(in_port);
    const complexd caux = (u.adjoint() * l.c)(0);
    const Eigen::VectorXcd vaux = l.C.adjoint() * u;
    const Eigen::MatrixXcd corr = w * vaux * l.C.row(out_port);
    const Eigen::VectorXcd cre = w * l.c(out_port) * vaux;
    const Eigen::VectorXcd ann = w * std::conj(caux) * l.C.row(out_port).transpose();
    add_antihermitian_correction(out.H, corr, cre, ann);
    return out;
}

SlhTriple displace_to_hamiltonian(const SlhTriple& g) {
    SlhTriple out = g;
    for (auto& row : out.L) {
        const complexd c = row.scalar;
        if (c == complexd{0.0, 0.0}) continue;
        // H += (i/2)(c* M - c M')  ==> linear[m] += -(i/2) c conj(v_m)
        out.H.linear += (-kI / 2.0) * c * row.coeffs.conjugate();
        row.scalar = {0.0, 0.0};
    }
    return out;
}

SlhTriple make_pad() {
    SlhTriple g;
    g.S = Eigen::MatrixXcd::Identity(1, 1);
    g.L.assign(1, ModeOperator(0));
    g.H = HamiltonianPoly(0);
    return g;
}

SlhTriple make_drive(complexd eps) {
    SlhTriple g = make_pad();
    g.L[0].scalar = eps;
    return g;
}

SlhTriple make_phase(double phi) {
    SlhTriple g = make_pad();
    g.S(0, 0) = std::exp(kI * phi);
    return g;
}

SlhTriple make_beamsplitter(double eta) {
    if (eta < 0.0 || eta > 1.0) {
        throw std::invalid_argument("make_beamsplitter: eta outside [0, 1]");
    }
    const double t = std::sqrt(1.0 - eta * eta);
    SlhTriple g;
    g.S.resize(2, 2);
    g.S << complexd(t), complexd(eta), complexd(-eta), complexd(t);
    g.L.assign(2, ModeOperator(0));
    g.H = HamiltonianPoly(0);
    return g;
}

SlhTriple make_cavity_port(const std::string& mode, double kappa, double kerr,
                           double delta) {
    if (kappa < 0.0) {
        throw std::invalid_argument("make_cavity_port: kappa < 0");
    }
    SlhTriple g;
    g.modes = {mode};
    g.S = Eigen::MatrixXcd::Identity(1, 1);
    g.L.assign(1, ModeOperator(1));
    g.L[0].coeffs(0) = std::sqrt(kappa);
    g.H = HamiltonianPoly(1);
    g.H.kerr(0) = kerr;
    g.H.quad(0, 0) = delta;
    return g;
}

SlhTriple make_loss_port(const std::string& mode, double kappa_int) {
    return make_cavity_port(mode, kappa_int);
}

SlhTriple make_component(ComponentKind kind, const ComponentParams& p) {
    switch (kind) {
        case ComponentKind::pad: return make_pad();
        case ComponentKind::drive: return make_drive(p.eps);
        case ComponentKind::phase: return make_phase(p.phi);
        case ComponentKind::beamsplitter: return make_beamsplitter(p.eta);
        case ComponentKind::cavity_port:
            return make_cavity_port(p.mode, p.kappa, p.kerr, p.delta);
        case ComponentKind::loss_port: return make_loss_port(p.mode, p.kappa);
    }
    throw std::invalid_argument("make_component: unknown kind");
}

} // namespace cfclock::slh
