#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "amp/liouville.hpp"
#include "amp/qcore.hpp"
#include "amp/threelevel.hpp"

using namespace amp;

namespace {

AtomParams pumped_atom(double G10, double G21, double p10 = 0.0, double p21 = 0.0,
                       double p20 = 0.0) {
    AtomParams p;
    p.n_levels = 3;
    p.Gamma10 = G10;
    p.Gamma21 = G21;
    p.Gphi10 = p10;
    p.Gphi21 = p21;
    p.Gphi20 = p20;
    return p;
}

MatX pumped_liouvillian(const AtomParams& p, const DriveProbe& d) {
    MatX s01 = MatX::Zero(3, 3);
    s01(0, 1) = 1.0;
    MatX s12 = MatX::Zero(3, 3);
    s12(1, 2) = 1.0;
    const Dephasings g = total_dephasings(p);
    return build_liouvillian(hamiltonian_3lvl(d), {{p.Gamma10, s01}, {*p.Gamma21, s12}},
                             {{g.gamma10, 1, 0}, {g.gamma21, 2, 1}, {g.gamma20, 2, 0}});
}

}  // namespace

TEST_CASE("density matrix constructor enforces the physical invariants") {
    MatX ok = MatX::Zero(2, 2);
    ok(0, 0) = 0.75;
    ok(1, 1) = 0.25;
    ok(0, 1) = cxd(0.1, 0.2);
    ok(1, 0) = std::conj(ok(0, 1));
    CHECK_NOTHROW(DensityMatrix{ok});

    MatX bad_herm = ok;
    bad_herm(1, 0) = ok(0, 1);  // not the conjugate
    CHECK_THROWS_AS(DensityMatrix{bad_herm}, std::invalid_argument);

    MatX bad_trace = ok;
    bad_trace(0, 0) = 0.8;
    CHECK_THROWS_AS(DensityMatrix{bad_trace}, std::invalid_argument);

    MatX bad_pos = MatX::Zero(2, 2);
    bad_pos(0, 0) = 1.4;
    bad_pos(1, 1) = -0.4;
    CHECK_THROWS_AS(DensityMatrix{bad_pos}, std::invalid_argument);
}

TEST_CASE("generator conserves trace and Hermiticity") {
    const AtomParams p = pumped_atom(0.7, 1.3, 0.12, 0.23, 0.31);
    DriveProbe d;
    d.Omega_d = 0.9;
    d.Omega_p = 0.2;
    d.dw10 = 0.4;
    d.dw20 = -0.6;
    const MatX L = pumped_liouvillian(p, d);

    // the trace of d rho/dt vanishes column by column
    for (int b = 0; b < 9; ++b) {
        cxd s = 0.0;
        for (int i = 0; i < 3; ++i) s += L(i + 3 * i, b);
        CHECK(std::abs(s) < 1e-12);
    }

    // Hermitian input stays Hermitian under the flow
    MatX rho = MatX::Zero(3, 3);
    rho(0, 0) = 0.5;
    rho(1, 1) = 0.3;
    rho(2, 2) = 0.2;
    rho(0, 1) = cxd(0.05, -0.02);
    rho(1, 0) = std::conj(rho(0, 1));
    rho(1, 2) = cxd(-0.03, 0.07);
    rho(2, 1) = std::conj(rho(1, 2));
    VecX v(9);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) v(i + 3 * j) = rho(i, j);  // column stacking
    const VecX dv = L * v;
    MatX drho(3, 3);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) drho(i, j) = dv(i + 3 * j);
    CHECK((drho - drho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("steady state reproduces the closed-form populations") {
    const AtomParams p = pumped_atom(0.3, 1.0, 0.04, 0.11, 0.07);
    DriveProbe d;
    d.Omega_d = 0.8;
    d.Omega_p = 1e-4 * p.Gamma10;
    d.dw10 = 0.5;
    d.dw20 = -0.3;
    const DensityMatrix rho = steady_state(pumped_liouvillian(p, d));
    const ThreeLevelSteadyState ss = steady_state_3lvl(p, d);
    CHECK(std::abs(rho.population(0) - ss.rho00) < 1e-8);
    CHECK(std::abs(rho.population(1) - ss.rho11) < 1e-8);
    CHECK(std::abs(rho.population(2) - ss.rho22) < 1e-8);
    CHECK(rho.population(0) + rho.population(1) + rho.population(2) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("degenerate kernels are rejected") {
    // with no dissipation at all every density matrix is steady
    const MatX L = build_liouvillian(MatX::Zero(2, 2), {}, {});
    CHECK_THROWS_AS(steady_state(L), std::runtime_error);
}

TEST_CASE("collapse channels must transfer population through a projector") {
    MatX both = MatX::Zero(3, 3);
    both(0, 1) = 1.0;
    both(0, 2) = 1.0;  // c†c has cross terms: not a projector
    CHECK_THROWS_AS(build_liouvillian(MatX::Zero(3, 3), {{1.0, both}}, {}),
                    std::invalid_argument);
}
