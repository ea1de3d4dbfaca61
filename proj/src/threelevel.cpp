#include "amp/threelevel.hpp"

#include <cmath>
#include <stdexcept>

namespace amp {

namespace {

constexpr cxd I{0.0, 1.0};

double geometry_factor(Geometry geo) {
    return geo == Geometry::MirrorTerminated ? 2.0 : 1.0;
}

struct Populations {
    double rho00, rho11, rho22;
};

// Weights (Gamma10 (c + Od^2), Gamma21 Od^2, Gamma10 Od^2) with
// c = 2 Gamma21 |l02|^2 / gamma20: equal to the A,B ratio form but finite at
// Omega_d = 0 and Gamma10 = 0.
Populations populations_weighted(const AtomParams& p, const Dephasings& g, const LambdaCoeffs& lam,
                                 double Od) {
    const double G10 = p.Gamma10;
    const double G21 = *p.Gamma21;
    if (g.gamma20 <= 0.0) throw std::invalid_argument("steady state undefined: gamma20 = 0");
    const double c = 2.0 * G21 * std::norm(lam.l02) / g.gamma20;
    const double Od2 = Od * Od;
    const double w00 = G10 * (c + Od2);
    const double w11 = G21 * Od2;
    const double w22 = G10 * Od2;
    const double den = w00 + w11 + w22;
    if (den <= 0.0) throw std::runtime_error("steady state undefined: all population weights vanish");
    return {w00 / den, w11 / den, w22 / den};
}

}  // namespace

LambdaCoeffs lambda_coeffs(const Dephasings& g, const DriveProbe& d) {
    LambdaCoeffs l;
    l.l10 = g.gamma10 + I * d.dw10;
    l.l12 = g.gamma21 - I * d.dw20 + I * d.dw10;
    l.l02 = g.gamma20 - I * d.dw20;
    return l;
}

ThreeLevelSteadyState steady_state_3lvl(const AtomParams& p, const DriveProbe& d) {
    p.validate();
    if (p.n_levels != 3) throw std::invalid_argument("steady_state_3lvl requires a three-level atom");
    if (d.Omega_d == 0.0)
        throw std::invalid_argument("populations undefined via A (divide by zero); use the Liouvillian oracle");
    if (p.Gamma10 <= 0.0)
        throw std::invalid_argument("population ratio B undefined: Gamma10 = 0");
    const Dephasings g = total_dephasings(p);
    const LambdaCoeffs lam = lambda_coeffs(g, d);
    if (g.gamma20 <= 0.0) throw std::invalid_argument("steady state undefined: gamma20 = 0");

    ThreeLevelSteadyState s;
    s.A = 2.0 * *p.Gamma21 * std::norm(lam.l02) / (g.gamma20 * d.Omega_d * d.Omega_d) + 1.0;
    s.B = *p.Gamma21 / p.Gamma10;
    const Populations pops = populations_weighted(p, g, lam, d.Omega_d);
    s.rho00 = pops.rho00;
    s.rho11 = pops.rho11;
    s.rho22 = pops.rho22;
    return s;
}

cxd reflection_3lvl(const AtomParams& p, const DriveProbe& d, Geometry geo, CoherencePath path) {
    p.validate();
    if (p.n_levels != 3) throw std::invalid_argument("reflection_3lvl requires a three-level atom");
    const Dephasings g = total_dephasings(p);
    const LambdaCoeffs lam = lambda_coeffs(g, d);
    const Populations pops = populations_weighted(p, g, lam, d.Omega_d);
    const double f = geometry_factor(geo);
    const double Od2 = d.Omega_d * d.Omega_d;
    const double inv = pops.rho11 - pops.rho00;

    if (path == CoherencePath::FirstOrder)
        return 1.0 + f * p.Gamma10 * inv / (2.0 * lam.l10 + Od2 / (2.0 * lam.l12));

    const cxd X = (Od2 / (4.0 * lam.l02 * lam.l12) * (pops.rho00 - pops.rho22) + inv) /
                  (1.0 + Od2 / (4.0 * lam.l10 * lam.l12));
    return 1.0 + f * p.Gamma10 * X / (2.0 * lam.l10);
}

double gain_vs_nu(double nu, Geometry geo) {
    if (nu < 0.0) throw std::invalid_argument("nu must be non-negative");
    const double f = geometry_factor(geo);
    const double d = 1.0 + nu;
    return 1.0 + f * (nu - 1.0) / (d * d);
}

double first_order_max_reflection(double ratio, Geometry geo) {
    if (ratio < 0.0) throw std::invalid_argument("ratio must be non-negative");
    const double gain = 0.25 - 0.375 * ratio;
    return geo == Geometry::MirrorTerminated ? 1.0 + gain : 1.0 + 0.5 * gain;
}

double amplification_threshold(const AtomParams& p, const DriveProbe& d) {
    p.validate();
    if (p.n_levels != 3) throw std::invalid_argument("amplification_threshold requires a three-level atom");
    const Dephasings g = total_dephasings(p);
    if (g.gamma20 <= 0.0) throw std::invalid_argument("threshold undefined (gamma20 = 0)");
    const LambdaCoeffs lam = lambda_coeffs(g, d);
    return std::sqrt(2.0 * p.Gamma10 * std::norm(lam.l02) / g.gamma20);
}

DephasingOptimum dephasing_optimum(const AtomParams& p) {
    p.validate();
    if (p.n_levels != 3) throw std::invalid_argument("dephasing_optimum requires a three-level atom");
    const Dephasings g = total_dephasings(p);
    if (p.Gamma10 <= 0.0 || g.gamma20 <= 0.0)
        throw std::invalid_argument("threshold undefined (Gamma10 or gamma20 = 0)");
    const double k = g.gamma21 * g.gamma10 / (p.Gamma10 * g.gamma20);
    const double eta_c = std::sqrt(2.0 * (1.0 + 2.0 * k));
    DephasingOptimum o;
    o.eta_max = 1.0 + eta_c;
    o.Omega_d_opt = std::sqrt(2.0 * p.Gamma10 * g.gamma20 * o.eta_max);
    o.r_max = 1.0 + 2.0 * (p.Gamma10 / g.gamma10) /
                        ((1.0 + std::sqrt(2.0) / std::sqrt(1.0 + 2.0 * k)) * ((eta_c + 1.0) / k + 2.0));
    return o;
}

}  // namespace amp
