#include "amp/qcore.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace amp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_rate(double v, const char* name) {
    require(std::isfinite(v), std::string(name) + " must be finite");
    require(v >= 0.0, std::string(name) + " must be non-negative");
}

}  // namespace

void AtomParams::validate() const {
    require(n_levels == 2 || n_levels == 3, "n_levels must be 2 or 3");
    check_rate(Gamma10, "Gamma10");
    check_rate(Gphi10, "Gphi10");
    if (n_levels == 2) {
        require(!Gamma21.has_value(), "two-level atom must not set Gamma21");
        require(!Gphi21.has_value(), "two-level atom must not set Gphi21");
        require(!Gphi20.has_value(), "two-level atom must not set Gphi20");
        require(!alpha.has_value(), "two-level atom must not set alpha");
    } else {
        require(Gamma21.has_value(), "three-level atom requires Gamma21");
        require(Gphi21.has_value(), "three-level atom requires Gphi21");
        require(Gphi20.has_value(), "three-level atom requires Gphi20");
        check_rate(*Gamma21, "Gamma21");
        check_rate(*Gphi21, "Gphi21");
        check_rate(*Gphi20, "Gphi20");
    }
    if (omega10) require(std::isfinite(*omega10), "omega10 must be finite");
    if (alpha) require(std::isfinite(*alpha), "alpha must be finite");
}

Dephasings total_dephasings(const AtomParams& p) {
    p.validate();
    Dephasings g;
    g.gamma10 = 0.5 * p.Gamma10 + p.Gphi10;
    if (p.n_levels == 3) {
        g.gamma21 = 0.5 * *p.Gamma21 + *p.Gphi21;
        g.gamma20 = 0.5 * *p.Gamma21 + *p.Gphi20;
    }
    return g;
}

}  // namespace amp
