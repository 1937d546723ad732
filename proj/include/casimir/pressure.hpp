#pragma once

// Net Casimir pressure on the movable plate with internal temperature T and
// external temperature T'. Positive values push the plate outward.

#include "casimir/special_functions.hpp"
#include "casimir/thermo_state.hpp"
#include "casimir/units.hpp"

namespace casimir {

/// pi^2 k^4 / (45 (hbar c)^3) * T^4, the black-body radiation pressure.
inline double radiation_pressure(double temperature, const UnitSystem& units = {}) {
    detail::require_temperature(temperature, "temperature");
    const double x = units.k_boltzmann * temperature / units.hbar_c();
    return pi2 * units.hbar_c() * x * x * x * x / 45.0;
}

/// Pressure of the internal region alone, (pi^2 hbar c / a^4) p(v) plus the
/// black-body part at T.
inline double internal_pressure(double a, double T, const UnitSystem& units = {},
                                const SeriesControl& ctrl = {}) {
    const double v = reduced_v(a, T, units);
    return casimir_scale(a, 4, units) * p_reduced(v, ctrl) + radiation_pressure(T, units);
}

/// P(a, T, T') = (pi^2 hbar c / a^4) p(v) + pi^2 k^4 (T^4 - T'^4) / (45 (hbar c)^3).
inline double casimir_pressure(double a, double T, double T_prime, const UnitSystem& units = {},
                               const SeriesControl& ctrl = {}) {
    const double v = reduced_v(a, T, units);
    return casimir_scale(a, 4, units) * p_reduced(v, ctrl) +
           (radiation_pressure(T, units) - radiation_pressure(T_prime, units));
}

} // namespace casimir
