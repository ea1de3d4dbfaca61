#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "amp/qcore.hpp"

namespace amp {

using cxd = std::complex<double>;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

// Validated density matrix: Hermitian to 1e-10, unit trace to 1e-10,
// eigenvalues >= -1e-9.
class DensityMatrix {
public:
    explicit DensityMatrix(MatX rho);
    const MatX& mat() const { return rho_; }
    double population(int i) const { return rho_(i, i).real(); }
    cxd coherence(int i, int j) const { return rho_(i, j); }
    int dim() const { return static_cast<int>(rho_.rows()); }

private:
    MatX rho_;
};

// Population-transfer channel: rate * (c rho c† - (c†c) rho (c†c)).
// Requires c†c to be a projector (true for level lowering operators); the
// channel moves population without touching coherences. All coherence decay
// is supplied separately through CoherenceDecay entries carrying the *total*
// gamma_ij, so radiative broadening is not double counted.
struct CollapseChannel {
    double rate = 0.0;
    MatX op;
};

// -rate * rho_ij (and rho_ji) damping of one off-diagonal pair.
struct CoherenceDecay {
    double rate = 0.0;
    int i = 0;
    int j = 0;
};

// Rotating-frame Hamiltonian of the pumped three-level atom:
// diag(0, dw10, dw20) + (Omega_p/2)(s01 + s10) + (Omega_d/2)(s02 + s20).
MatX hamiltonian_3lvl(const DriveProbe& d);

// Column-stacked generator d vec(rho)/dt = L vec(rho); vec index i + dim*j
// holds rho_ij.
MatX build_liouvillian(const MatX& H, const std::vector<CollapseChannel>& channels,
                       const std::vector<CoherenceDecay>& dephasings);

// Steady state as the one-dimensional kernel of L, solved by replacing the
// (0,0) row with the trace row. Degeneracy and residual checks run on the
// max-abs-normalized generator: kernel dimension > 1 within 1e-8 throws,
// residual above 1e-10 throws.
DensityMatrix steady_state(const MatX& L);

}  // namespace amp
