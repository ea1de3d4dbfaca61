#include "amp/mirror.hpp"

#include <cmath>
#include <stdexcept>

namespace amp {

void MirrorSetup::validate() const {
    if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("mirror distance L must be positive");
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("propagation speed v must be positive");
    if (Gamma10_TL < 0.0 || Gamma21_TL < 0.0)
        throw std::invalid_argument("bare line rates must be non-negative");
}

MirrorRates rates_at(const MirrorSetup& m, Geometry geo, double omega10, double alpha) {
    m.validate();
    if (geo == Geometry::OpenWaveguide)
        throw std::invalid_argument("rates are bare Gamma^TL in an open waveguide");
    const double tof = m.L / m.v;
    const double c10 = std::cos(tof * omega10);
    const double c21 = std::cos(tof * (omega10 + alpha));
    return {2.0 * m.Gamma10_TL * c10 * c10, 2.0 * m.Gamma21_TL * c21 * c21};
}

double free_spectral_range(const MirrorSetup& m) {
    m.validate();
    const double pi = two_pi / 2.0;
    return pi * m.v / m.L;
}

}  // namespace amp
