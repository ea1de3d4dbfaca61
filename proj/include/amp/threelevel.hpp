#pragma once

#include <complex>

#include "amp/qcore.hpp"

namespace amp {

using cxd = std::complex<double>;

// Complex damping denominators of the weak-probe coherences:
// l10 = gamma10 + i dw10, l12 = gamma21 - i dw20 + i dw10, l02 = gamma20 - i dw20.
struct LambdaCoeffs {
    cxd l10, l12, l02;
};

LambdaCoeffs lambda_coeffs(const Dephasings& g, const DriveProbe& d);

// Probe-free steady populations of the pumped three-level atom together with
// the population ratios A = rho00/rho22, B = rho11/rho22.
struct ThreeLevelSteadyState {
    double rho00 = 0.0, rho11 = 0.0, rho22 = 0.0;
    double A = 0.0, B = 0.0;
};

// Throws at Omega_d == 0, where the ratio A diverges; the Liouvillian solver
// covers that limit.
ThreeLevelSteadyState steady_state_3lvl(const AtomParams& p, const DriveProbe& d);

// Full keeps the pump-coherence contribution to the probe response;
// FirstOrder keeps only the population-inversion term.
enum class CoherencePath { Full, FirstOrder };

// Weak-probe reflection coefficient (independent of Omega_p). The scattered
// term carries a factor 2 with a mirror (single output port) and 1 in an open
// waveguide. Well-defined at Omega_d = 0 and at rate nodes via a rescaled
// population form that never divides by rho22.
cxd reflection_3lvl(const AtomParams& p, const DriveProbe& d, Geometry geo,
                    CoherencePath path = CoherencePath::Full);

// Ideal-limit resonant reflection versus nu = Omega_d^2/(Gamma10 Gamma21):
// 1 + f (nu - 1)/(1 + nu)^2, f = 2 (mirror) or 1 (open). Unique maximum at
// nu = 3: 1.25 / 1.125.
double gain_vs_nu(double nu, Geometry geo);

// Small-ratio maximum of |r| to first order in ratio = Gamma10/Gamma21:
// 1.25 - (3/8) ratio (mirror); gain halves in an open waveguide.
double first_order_max_reflection(double ratio, Geometry geo);

// Minimum drive for population inversion, sqrt(2 Gamma10 |l02|^2 / gamma20).
// Throws "threshold undefined" at gamma20 = 0.
double amplification_threshold(const AtomParams& p, const DriveProbe& d);

// Resonant-probe optimum with pure dephasing, to first order in
// Gamma10/Gamma21, parametrized by eta = Omega_d^2/(2 Gamma10 gamma20).
struct DephasingOptimum {
    double eta_max = 0.0;
    double Omega_d_opt = 0.0;
    double r_max = 0.0;  // small-ratio closed form at the optimum
};

DephasingOptimum dephasing_optimum(const AtomParams& p);

}  // namespace amp
