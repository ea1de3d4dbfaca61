#pragma once

#include "amp/qcore.hpp"

namespace amp {

// Semi-infinite line shorted at distance L from the atom; v is the
// propagation speed. Gamma10_TL / Gamma21_TL are the bare open-line
// relaxation rates (angular units).
struct MirrorSetup {
    double L = 0.0;
    double v = 0.0;
    double Gamma10_TL = 0.0;
    double Gamma21_TL = 0.0;

    void validate() const;
};

struct MirrorRates {
    double Gamma10 = 0.0;
    double Gamma21 = 0.0;
};

// Standing-wave-modified rates at transition frequency omega10 with
// anharmonicity alpha = omega21 - omega10 (both angular):
//   Gamma10 = 2 Gamma10_TL cos^2[(L/v) omega10]
//   Gamma21 = 2 Gamma21_TL cos^2[(L/v)(omega10 + alpha)]
// Only meaningful in front of a mirror; throws for an open waveguide.
MirrorRates rates_at(const MirrorSetup& m, Geometry geo, double omega10, double alpha);

// Node-to-node spacing of the cos^2 pattern in omega10 (angular): pi v / L.
double free_spectral_range(const MirrorSetup& m);

}  // namespace amp
