#include "amp/dressed.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace amp {

namespace {

constexpr cxd I{0.0, 1.0};

// Full-rate transition operator, used for the drive term in both geometries
// so that Omega_d always means the on-atom Rabi amplitude.
MatX transition_operator_full(const AtomParams& p) {
    const int n = p.n_levels;
    MatX st = MatX::Zero(n, n);
    st(0, 1) = std::sqrt(p.Gamma10);
    if (n == 3) st(1, 2) = std::sqrt(*p.Gamma21);
    return st;
}

std::string level_name(int k, int dim) {
    static const char* three[] = {"g", "m", "e"};
    static const char* two[] = {"g", "e"};
    return dim == 3 ? three[k] : two[k];
}

}  // namespace

MatX transition_operator(const AtomParams& p, Geometry geo) {
    MatX st = transition_operator_full(p);
    if (geo == Geometry::OpenWaveguide) st /= std::sqrt(2.0);  // two ports, half rate each
    return st;
}

MatX build_atom_hamiltonian(const AtomParams& p, const StrongDrive& drv, Scheme scheme) {
    p.validate();
    if (scheme == Scheme::ThreeLevelPumped)
        throw std::invalid_argument(
            "the pumped ladder is probed on the bare 1<->0 transition; "
            "use the weak-probe closed forms, not the dressed engine");
    const int want = scheme == Scheme::TwoLevelResonant ? 2 : 3;
    if (p.n_levels != want)
        throw std::invalid_argument("scheme expects a " + std::to_string(want) + "-level atom");
    if (drv.Omega_d != 0.0 && p.Gamma10 <= 0.0)
        throw std::invalid_argument("drive amplitude undefined: Gamma10 = 0");

    const int n = p.n_levels;
    MatX H = MatX::Zero(n, n);
    H(1, 1) = drv.d10;
    if (n == 3) H(2, 2) = drv.d20;
    if (drv.Omega_d != 0.0) {
        const double E = drv.Omega_d / (2.0 * std::sqrt(p.Gamma10));
        const MatX st = transition_operator_full(p);
        H += E * (st + st.adjoint());
    }
    return H;
}

DressedSystem dress(const AtomParams& p, const StrongDrive& drv, Scheme scheme, Geometry geo) {
    const MatX H = build_atom_hamiltonian(p, drv, scheme);
    const int n = p.n_levels;

    Eigen::SelfAdjointEigenSolver<MatX> es(H);
    if (es.info() != Eigen::Success) throw std::runtime_error("dressed-state eigensolve failed");
    Eigen::VectorXd w = es.eigenvalues();
    MatX V = es.eigenvectors();

    const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
    if ((V.adjoint() * V - MatX::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
        throw std::runtime_error("dressed basis not orthonormal");
    if ((H * V - V * w.asDiagonal().toDenseMatrix().cast<cxd>()).cwiseAbs().maxCoeff() >
        1e-10 * scale)
        throw std::runtime_error("dressed-state eigensolve residual too large");

    // phase fix: first non-negligible component of each column real positive
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) {
            const cxd v = V(i, c);
            if (std::abs(v) > 1e-12) {
                V.col(c) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }

    DressedSystem ds;
    ds.omega = w;
    ds.basis = V;
    ds.sigma_t = V.adjoint() * transition_operator(p, geo) * V;
    ds.dim = n;
    ds.geometry = geo;
    return ds;
}

Superoperators superoperators(const DressedSystem& ds) {
    const int n = ds.dim;
    const int K = n * n;
    const MatX& st = ds.sigma_t;
    const MatX St = st.adjoint();
    const MatX StS = St * st;
    // Open waveguide: each of the two ports relaxes the atom at half rate,
    // and sigma_t already carries 1/sqrt(2); summing the ports doubles xi.
    const double xifac = ds.geometry == Geometry::OpenWaveguide ? 2.0 : 1.0;

    Superoperators so;
    so.Xi = MatX::Zero(K, K);
    so.Z = MatX::Zero(K, K);
    so.omega_mn = Eigen::VectorXd::Zero(K);
    so.dim = n;
    for (int mu = 0; mu < n; ++mu) {
        for (int nu = 0; nu < n; ++nu) {
            const int a = mu * n + nu;
            MatX E = MatX::Zero(n, n);
            E(mu, nu) = 1.0;
            const MatX xi = xifac * (0.5 * E * StS + 0.5 * StS * E - St * E * st);
            const MatX zeta = E * St - St * E;
            for (int mp = 0; mp < n; ++mp)
                for (int np = 0; np < n; ++np) {
                    const int b = mp * n + np;
                    so.Xi(a, b) = xi(mp, np);
                    so.Z(a, b) = zeta(mp, np);
                }
            so.omega_mn(a) = ds.omega(mu) - ds.omega(nu);
        }
    }
    return so;
}

namespace {

// Replace the (0,0)-pair row with the trace row; valid both for the steady
// state (trace one) and the linear response (trace identically zero, since
// sum_mu zeta_{mu mu} = [1, sigma_t^dagger] = 0).
void deflate_trace_row(MatX& M, int dim) {
    M.row(0).setZero();
    for (int k = 0; k < dim; ++k) M(0, k * dim + k) = 1.0;
}

}  // namespace

VecX steady_state_dressed(const Superoperators& so) {
    const int n = so.dim;
    const int K = n * n;
    MatX M = I * MatX(so.omega_mn.cast<cxd>().asDiagonal()) - so.Xi;
    MatX M2 = M;
    deflate_trace_row(M2, n);
    VecX b = VecX::Zero(K);
    b(0) = 1.0;

    Eigen::FullPivLU<MatX> lu(M2);
    if (!lu.isInvertible()) throw std::runtime_error("degenerate steady state");
    VecX sS = lu.solve(b);

    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    if ((M * sS).cwiseAbs().maxCoeff() > 1e-8 * scale)
        throw std::runtime_error("degenerate steady state");
    return sS;
}

VecX linear_response(const Superoperators& so, const VecX& steady, double Delta) {
    const int n = so.dim;
    const int K = n * n;
    MatX ML = I * MatX((so.omega_mn.array() + Delta).matrix().cast<cxd>().asDiagonal()) - so.Xi;
    VecX rhs = I * (so.Z * steady);
    deflate_trace_row(ML, n);
    rhs(0) = 0.0;

    Eigen::FullPivLU<MatX> lu(ML);
    if (!lu.isInvertible()) {
        int amin = 1;
        double best = std::numeric_limits<double>::infinity();
        for (int a = 1; a < K; ++a) {
            const double gap = std::abs(I * (so.omega_mn(a) + Delta) - so.Xi(a, a));
            if (gap < best) {
                best = gap;
                amin = a;
            }
        }
        throw std::runtime_error("linear response singular near pair (" +
                                 level_name(amin / n, n) + "," + level_name(amin % n, n) + ")");
    }
    VecX sL = lu.solve(rhs);
    if ((ML * sL - rhs).cwiseAbs().maxCoeff() >
        1e-8 * std::max(1.0, rhs.cwiseAbs().maxCoeff()))
        throw std::runtime_error("linear response solve residual too large");
    return sL;
}

cxd reflection_dressed(const DressedSystem& ds, const VecX& sL) {
    const int n = ds.dim;
    cxd acc = 0.0;
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) acc += ds.sigma_t(mu, nu) * sL(mu * n + nu);
    return 1.0 - I * acc;
}

cxd reflection_strong(const AtomParams& p, const StrongDrive& drv, Scheme scheme, Geometry geo,
                      double Delta) {
    const DressedSystem ds = dress(p, drv, scheme, geo);
    const Superoperators so = superoperators(ds);
    const VecX sS = steady_state_dressed(so);
    const VecX sL = linear_response(so, sS, Delta);
    return reflection_dressed(ds, sL);
}

cxd two_level_reflection_closed_form(const AtomParams& p, double Omega_d, double delta) {
    p.validate();
    if (p.n_levels != 2)
        throw std::invalid_argument("closed form describes a two-level atom");
    const double G = p.Gamma10;
    const double O2 = Omega_d * Omega_d;
    const cxd num =
        2.0 * G * G * (G * G * G - 3.0 * I * G * G * delta - 2.0 * G * delta * delta +
                       2.0 * I * delta * O2);
    const cxd den = (G - 2.0 * I * delta) * (G * G + 2.0 * O2) *
                    (G * G - 3.0 * I * G * delta - 2.0 * delta * delta + 2.0 * O2);
    return 1.0 - num / den;
}

double resonant_branch_gain(const DressedSystem& ds, const Superoperators& so, const VecX& steady,
                            int mu, int nu) {
    const int n = ds.dim;
    if (mu < 0 || mu >= n || nu < 0 || nu >= n)
        throw std::invalid_argument("branch level out of range");
    if (mu == nu) throw std::invalid_argument("branch requires two distinct dressed levels");
    const int a = mu * n + nu;
    const double smunu2 = std::norm(ds.sigma_t(mu, nu));
    const double pn = steady(nu * n + nu).real();
    const double pm = steady(mu * n + mu).real();
    return (smunu2 / so.Xi(a, a) * (pn - pm)).real();
}

std::vector<Branch> branch_frequencies(const DressedSystem& ds, double omega_d) {
    std::vector<Branch> out;
    const int n = ds.dim;
    out.reserve(n * (n - 1));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            if (mu == nu) continue;
            Branch b;
            b.mu = mu;
            b.nu = nu;
            b.omega_p = omega_d + ds.omega(nu) - ds.omega(mu);
            b.label = level_name(mu, n) + "," + level_name(nu, n);
            out.push_back(b);
        }
    return out;
}

}  // namespace amp
