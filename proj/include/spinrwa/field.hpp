#ifndef SPINRWA_FIELD_HPP
#define SPINRWA_FIELD_HPP

#include <cmath>
#include <string>

#include "spinrwa/errors.hpp"

namespace spinrwa {

/// Drive configuration in reduced angular-frequency units (hbar = 1):
/// omega0 is the Larmor frequency of the static field, omega1 the
/// transverse drive strength, omega the drive rotation frequency.
struct FieldConfig {
    double omega0;
    double omega1;
    double omega;

    FieldConfig(double omega0_, double omega1_, double omega_)
        : omega0(omega0_), omega1(omega1_), omega(omega_) {
        if (!std::isfinite(omega0) || !std::isfinite(omega1) || !std::isfinite(omega))
            throw std::invalid_argument("field: all frequencies must be finite");
    }

    double detuning() const { return omega0 - omega; }
};

/// The rotating-frame construction needs omega1 strictly positive: at
/// omega1 = 0 the mixing angle flips between 0 and pi discontinuously and
/// the motion is pure Larmor phases. The brute-force integrator has no
/// such restriction.
inline void require_driven(const FieldConfig& field) {
    if (!(field.omega1 > 0.0))
        throw DegenerateField("field: omega1 must be > 0, got " +
                              std::to_string(field.omega1));
}

} // namespace spinrwa

#endif // SPINRWA_FIELD_HPP
