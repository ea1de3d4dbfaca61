#include "amp/liouville.hpp"

#include <stdexcept>
#include <string>

namespace amp {

namespace {

int vec_index(int i, int j, int dim) { return i + dim * j; }

double max_abs(const MatX& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

DensityMatrix::DensityMatrix(MatX rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols()) throw std::invalid_argument("density matrix must be square");
    const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-10) throw std::invalid_argument("density matrix not Hermitian (deviation " + std::to_string(herm) + ")");
    const double tr = std::abs(rho_.trace() - cxd(1.0, 0.0));
    if (tr > 1e-10) throw std::invalid_argument("density matrix trace differs from 1 by " + std::to_string(tr));
    Eigen::SelfAdjointEigenSolver<MatX> es(0.5 * (rho_ + rho_.adjoint().eval()), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
        throw std::invalid_argument("density matrix has negative eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
}

MatX hamiltonian_3lvl(const DriveProbe& d) {
    MatX H = MatX::Zero(3, 3);
    H(1, 1) = d.dw10;
    H(2, 2) = d.dw20;
    H(0, 1) = H(1, 0) = 0.5 * d.Omega_p;
    H(0, 2) = H(2, 0) = 0.5 * d.Omega_d;
    return H;
}

MatX build_liouvillian(const MatX& H, const std::vector<CollapseChannel>& channels,
                       const std::vector<CoherenceDecay>& dephasings) {
    if (H.rows() != H.cols()) throw std::invalid_argument("Hamiltonian must be square");
    const int dim = static_cast<int>(H.rows());
    const int K = dim * dim;
    MatX L = MatX::Zero(K, K);

    // -i [H, rho]
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                L(vec_index(i, j, dim), vec_index(k, j, dim)) += cxd(0, -1) * H(i, k);
                L(vec_index(i, j, dim), vec_index(i, k, dim)) += cxd(0, 1) * H(k, j);
            }

    // rate * (c rho c† - (c†c) rho (c†c)): population transfer only
    for (const auto& ch : channels) {
        if (ch.op.rows() != dim || ch.op.cols() != dim)
            throw std::invalid_argument("collapse operator dimension mismatch");
        const MatX P = ch.op.adjoint() * ch.op;
        if ((P * P - P).cwiseAbs().maxCoeff() > 1e-12)
            throw std::invalid_argument("collapse operator c†c must be a projector");
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k)
                    for (int l = 0; l < dim; ++l) {
                        const cxd gain = ch.op(i, k) * std::conj(ch.op(j, l));
                        const cxd loss = P(i, k) * std::conj(P(j, l));
                        if (gain != cxd(0, 0) || loss != cxd(0, 0))
                            L(vec_index(i, j, dim), vec_index(k, l, dim)) += ch.rate * (gain - loss);
                    }
    }

    // -gamma_ij on the (i,j)/(j,i) off-diagonal pair
    for (const auto& dp : dephasings) {
        if (dp.i == dp.j || dp.i < 0 || dp.j < 0 || dp.i >= dim || dp.j >= dim)
            throw std::invalid_argument("coherence decay requires a valid off-diagonal pair");
        L(vec_index(dp.i, dp.j, dim), vec_index(dp.i, dp.j, dim)) -= dp.rate;
        L(vec_index(dp.j, dp.i, dim), vec_index(dp.j, dp.i, dim)) -= dp.rate;
    }
    return L;
}

DensityMatrix steady_state(const MatX& L) {
    const int K = static_cast<int>(L.rows());
    const int dim = static_cast<int>(std::lround(std::sqrt(double(K))));
    if (dim * dim != K) throw std::invalid_argument("Liouvillian size must be a perfect square");

    const double scale = max_abs(L);
    if (scale == 0.0) throw std::runtime_error("non-unique steady state (zero generator)");
    const MatX Ln = L / scale;

    Eigen::JacobiSVD<MatX> svd(Ln);
    const auto& sv = svd.singularValues();
    int null_dim = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) < 1e-8 * sv(0)) ++null_dim;
    if (null_dim > 1)
        throw std::runtime_error("non-unique steady state (kernel dimension " + std::to_string(null_dim) + ")");

    MatX M = Ln;
    VecX b = VecX::Zero(K);
    const int row = vec_index(0, 0, dim);
    M.row(row).setZero();
    for (int k = 0; k < dim; ++k) M(row, vec_index(k, k, dim)) = 1.0;
    b(row) = 1.0;

    const VecX v = M.fullPivLu().solve(b);
    const double resid = (Ln * v).cwiseAbs().maxCoeff();
    if (resid > 1e-10)
        throw std::runtime_error("steady-state residual " + std::to_string(resid) + " exceeds 1e-10");

    MatX rho(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) rho(i, j) = v(vec_index(i, j, dim));
    return DensityMatrix(rho);
}

}  // namespace amp
