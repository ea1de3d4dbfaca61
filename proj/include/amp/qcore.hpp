#pragma once

#include <optional>

namespace amp {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Angular frequency in rad/s. The hz/mhz/ghz constructors take ordinary
// frequency f = omega/2pi and multiply by 2pi.
class AngularFreq {
public:
    AngularFreq() = default;
    static AngularFreq rad_per_s(double w) { return AngularFreq(w); }
    static AngularFreq hz(double f) { return AngularFreq(two_pi * f); }
    static AngularFreq mhz(double f) { return AngularFreq(two_pi * 1e6 * f); }
    static AngularFreq ghz(double f) { return AngularFreq(two_pi * 1e9 * f); }
    double rad_s() const { return w_; }
    double in_hz() const { return w_ / two_pi; }
    double in_mhz() const { return w_ / (two_pi * 1e6); }
    double in_ghz() const { return w_ / (two_pi * 1e9); }

private:
    explicit AngularFreq(double w) : w_(w) {}
    double w_ = 0.0;
};

enum class Geometry { MirrorTerminated, OpenWaveguide };

// Relaxation and pure-dephasing rates, angular units. Level layout:
// |1> -> |0> decays at Gamma10, |2> -> |1> at Gamma21; there is no direct
// |2> -> |0> relaxation. Two-level atoms must leave every |2>-related field
// (and alpha) unset.
struct AtomParams {
    int n_levels = 3;
    double Gamma10 = 0.0;
    std::optional<double> Gamma21;
    double Gphi10 = 0.0;
    std::optional<double> Gphi21;
    std::optional<double> Gphi20;
    std::optional<double> omega10;  // lab transition frequency (mirror tuning)
    std::optional<double> alpha;    // anharmonicity omega21 - omega10

    void validate() const;  // throws std::invalid_argument
};

// Weak-probe pumped scheme: coherent pump Omega_d on |0>-|2>, weak probe
// Omega_p on |0>-|1>. Detunings: dw10 = omega10 - omega_p,
// dw20 = omega20 - omega_d.
struct DriveProbe {
    double Omega_d = 0.0;
    double Omega_p = 0.0;
    double dw10 = 0.0;
    double dw20 = 0.0;
};

// Total coherence decay rates. gamma21 and gamma20 carry only the Gamma21/2
// relaxation share plus pure dephasing: gamma21 has no Gamma10/2 term and
// gamma20 no |2>->|0> term (that channel is absent).
struct Dephasings {
    double gamma10 = 0.0;
    double gamma21 = 0.0;
    double gamma20 = 0.0;
};

Dephasings total_dephasings(const AtomParams& p);

}  // namespace amp
