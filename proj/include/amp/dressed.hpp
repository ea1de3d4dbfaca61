#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "amp/liouville.hpp"
#include "amp/qcore.hpp"

namespace amp {

enum class Scheme { ThreeLevelPumped, TwoLevelResonant, ThreeLevelTwoPhoton };

// Strong-drive rotating frame: d10 = omega10 - omega_d and, for the
// two-photon scheme, d20 = omega20 - 2 omega_d.
struct StrongDrive {
    double Omega_d = 0.0;
    double d10 = 0.0;
    double d20 = 0.0;
};

// Waveguide transition operator sigma_t. Mirror: sqrt(Gamma10) s01
// (+ sqrt(Gamma21) s12 for three levels). An open waveguide couples two
// ports, each at half rate: sigma_t scales by 1/sqrt(2).
MatX transition_operator(const AtomParams& p, Geometry geo);

// Rotating-frame atom Hamiltonian. The drive term
// [Omega_d / (2 sqrt(Gamma10))] (sigma_t_full + h.c.) is built from the
// full-rate operator in both geometries, so Omega_d is the on-atom Rabi
// amplitude either way.
MatX build_atom_hamiltonian(const AtomParams& p, const StrongDrive& drv, Scheme scheme);

// Dressed states sorted by ascending frequency (labeled g, m, e); columns of
// `basis` are phase-fixed so the first non-negligible entry is real positive.
struct DressedSystem {
    Eigen::VectorXd omega;
    MatX basis;
    MatX sigma_t;  // geometry-consistent sigma_t in the dressed basis
    int dim = 0;
    Geometry geometry = Geometry::MirrorTerminated;
};

DressedSystem dress(const AtomParams& p, const StrongDrive& drv, Scheme scheme, Geometry geo);

// Equation-of-motion superoperators over <sigma_mu_nu>, pair index
// a = mu*dim + nu. Xi is the relaxation superoperator (doubled for the open
// waveguide's two ports, which exactly cancels the halved sigma_t inside it);
// Z(a,b) = <mu'|[s_mu_nu, sigma_t†]|nu'> sources the probe response.
struct Superoperators {
    MatX Xi;
    MatX Z;
    Eigen::VectorXd omega_mn;  // omega_mu - omega_nu per pair
    int dim = 0;
};

Superoperators superoperators(const DressedSystem& ds);

// <sigma_mu_nu> steady state: unit-trace kernel of i diag(omega_mn) - Xi.
// Throws "degenerate steady state" when the kernel is not one-dimensional.
VecX steady_state_dressed(const Superoperators& so);

// First-order response per unit probe amplitude F at probe-drive offset
// Delta = omega_p - omega_d. The response trace vanishes identically, so the
// (0,0) row is deflated to the trace row, keeping the solve regular at
// Delta = 0.
VecX linear_response(const Superoperators& so, const VecX& steady, double Delta);

// r = 1 - i sum_{mu,nu} sigma_t[mu,nu] sL[mu*dim + nu]
cxd reflection_dressed(const DressedSystem& ds, const VecX& sL);

// Dress, solve and evaluate r in one call.
cxd reflection_strong(const AtomParams& p, const StrongDrive& drv, Scheme scheme, Geometry geo,
                      double Delta);

// Resonantly probed two-level atom in front of a mirror, resonant drive;
// delta = omega_p - omega_d.
cxd two_level_reflection_closed_form(const AtomParams& p, double Omega_d, double delta);

// Resonant gain contribution |<mu|sigma_t|nu>|^2 / xi_{mu nu, mu nu} *
// (<s_nu_nu> - <s_mu_mu>) of the branch probed at
// omega_p = omega_d + omega_nu - omega_mu. Throws for mu == nu.
double resonant_branch_gain(const DressedSystem& ds, const Superoperators& so, const VecX& steady,
                            int mu, int nu);

struct Branch {
    int mu = 0, nu = 0;
    double omega_p = 0.0;  // omega_d + omega_nu - omega_mu on resonance
    std::string label;
};

// All ordered pairs mu != nu (6 branches for three levels, 2 for two), each
// with its resonant probe frequency; omega_d = 0 yields probe-drive offsets.
std::vector<Branch> branch_frequencies(const DressedSystem& ds, double omega_d = 0.0);

}  // namespace amp
