#pragma once

// Renormalized state functions of the two plate regions.
//
// The regulator-dependent zero-point bulk terms (proportional to
// lambda^-4) are dropped everywhere: they are identical per unit volume
// inside and outside, so they cancel in the net force on the plate.
// Internal quantities are per unit plate area; external ones per unit
// volume. Pressures are the force per area each region exerts on the
// movable plate, positive in the +a direction for the inside and
// reported as a magnitude for the outside.

#include <cmath>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace detail {

inline void require_positive_a(double a) {
    if (!(a > 0.0 && std::isfinite(a)))
        throw DomainError("plate separation must be positive and finite, got " +
                          std::to_string(a));
}

inline void require_temperature(double t, const char* name) {
    if (!(t >= 0.0 && std::isfinite(t)))
        throw DomainError(std::string(name) + " must be non-negative and finite, got " +
                          std::to_string(t));
}

} // namespace detail

/// v = a T k / (hbar pi c).
inline double reduced_v(double a, double temperature, const UnitSystem& units = {}) {
    detail::require_positive_a(a);
    detail::require_temperature(temperature, "temperature");
    return a * temperature * units.k_boltzmann / (units.hbar_c() * pi);
}

/// Plate separation with internal and external temperatures and the
/// derived reduced variables.
struct PlateState {
    double a = 1.0;
    double T = 0.0;
    double T_prime = 0.0;
    double v = 0.0;
    double v_prime = 0.0;

    static PlateState make(double a, double T, double T_prime, const UnitSystem& units = {}) {
        detail::require_temperature(T_prime, "external temperature");
        return {a, T, T_prime, reduced_v(a, T, units), reduced_v(a, T_prime, units)};
    }
};

/// Free energy, energy, entropy (per k) and pressure of one region.
struct ThermoQuantities {
    double free_energy = 0.0;
    double energy = 0.0;
    double entropy_per_k = 0.0;
    double pressure = 0.0;
};

/// pi^2 hbar c / a^n, the natural scale of the internal quantities.
inline double casimir_scale(double a, int power, const UnitSystem& units = {}) {
    return pi2 * units.hbar_c() / std::pow(a, power);
}

/// Exact internal-region state per unit plate area:
///   phi   = (pi^2 hbar c / a^3)(-1/720 + g)
///   e     = (pi^2 hbar c / a^3)(-1/720 + g - v g')
///   sigma = -(pi / a^2) g'
///   p     = (pi^2 hbar c / a^4)(-1/240 + 3 g - v g')
inline ThermoQuantities internal_state(double a, double T, const UnitSystem& units = {},
                                       const SeriesControl& ctrl = {}) {
    const double v = reduced_v(a, T, units);
    const GDerivatives g = g_eval(v, ctrl);
    const double s3 = casimir_scale(a, 3, units);
    return {
        s3 * (-1.0 / 720.0 + g.g),
        s3 * (-1.0 / 720.0 + g.g - v * g.dg),
        -pi / (a * a) * g.dg,
        s3 / a * (-1.0 / 240.0 + 3.0 * g.g - v * g.dg),
    };
}

/// Black-body quantities per unit volume for the outside region at T'.
/// The energy density is exactly three times the pressure.
inline ThermoQuantities external_state(double T_prime, const UnitSystem& units = {}) {
    detail::require_temperature(T_prime, "external temperature");
    const double kt = units.k_boltzmann * T_prime;
    const double hc = units.hbar_c();
    const double kt_over_hc = kt / hc;
    const double pressure = pi2 * kt * kt_over_hc * kt_over_hc * kt_over_hc / 45.0;
    return {
        -pressure,
        3.0 * pressure,
        4.0 * pi2 * kt_over_hc * kt_over_hc * kt_over_hc / 45.0,
        pressure,
    };
}

/// Large-v closed forms, with g replaced by 1/720 - pi^4 v^4/45 - zeta(3) v/(8 pi^2).
/// The pressure carries zeta(3) v / (4 pi^2), the coefficient consistent
/// with p = -d(phi)/da.
inline ThermoQuantities internal_state_asymptotic(double a, double T,
                                                  const UnitSystem& units = {}) {
    const double v = reduced_v(a, T, units);
    const double v3 = v * v * v;
    const double s3 = casimir_scale(a, 3, units);
    return {
        s3 * (-pi4 * v3 * v / 45.0 - zeta3_value * v / (8.0 * pi2)),
        s3 * 3.0 * pi4 * v3 * v / 45.0,
        pi / (a * a) * (4.0 * pi4 * v3 / 45.0 + zeta3_value / (8.0 * pi2)),
        s3 / a * (pi4 * v3 * v / 45.0 - zeta3_value * v / (4.0 * pi2)),
    };
}

/// Small-v closed forms, with g replaced by -zeta(3) v^3 / 2. The zero-point
/// terms dominate and the pressure is temperature independent.
inline ThermoQuantities internal_state_small_v(double a, double T,
                                               const UnitSystem& units = {}) {
    const double v = reduced_v(a, T, units);
    const double v3 = v * v * v;
    const double s3 = casimir_scale(a, 3, units);
    return {
        s3 * (-1.0 / 720.0 - 0.5 * zeta3_value * v3),
        s3 * (-1.0 / 720.0 + zeta3_value * v3),
        pi / (a * a) * 1.5 * zeta3_value * v * v,
        s3 / a * (-1.0 / 240.0),
    };
}

} // namespace casimir
