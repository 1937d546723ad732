#pragma once

// Zeros of the net Casimir pressure under isothermal and isentropic
// constraints, with stability from the sign of dP/da along the constraint.
// The net pressure is the outward force per area on the movable plate, so
// a root is stable when dP/da < 0.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/pressure.hpp"
#include "casimir/processes.hpp"
#include "casimir/root_finding.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/thermo_state.hpp"
#include "casimir/units.hpp"

namespace casimir {

enum class Stability { stable, unstable, marginal };

constexpr std::string_view to_string(Stability s) noexcept {
    switch (s) {
    case Stability::stable: return "stable";
    case Stability::unstable: return "unstable";
    case Stability::marginal: return "marginal";
    }
    return "unknown";
}

struct EquilibriumPoint {
    double a = 0.0;
    double v = 0.0;
    double T = 0.0;
    Stability stability = Stability::marginal;
    double residual = 0.0; ///< |P| at the reported a
    double slope = 0.0;    ///< dP/da along the process constraint
};

struct Isothermal {
    double T = 0.0;
};

struct Isentropic {
    Isentrope iso;
    PressureModel model = PressureModel::full;
};

/// Process constraint on the internal region plus the external temperature.
struct ProcessMode {
    std::variant<Isothermal, Isentropic> process;
    double T_prime = 0.0;
};

/// Dense sign-scan resolution and bracket expansion limits.
struct ScanConfig {
    std::size_t points_per_decade = 2000;
    int max_expansions = 60;

    void validate() const {
        if (points_per_decade < 1) throw DomainError("points_per_decade must be >= 1");
        if (max_expansions < 0) throw DomainError("max_expansions must be >= 0");
    }
};

/// Relative slope magnitude, a |dP/da| / (pi^2 hbar c / a^4), below which a
/// root is labeled marginal.
inline constexpr double marginal_slope_threshold = 1e-9;

/// Relative step of the central differences used for dP/da.
inline constexpr double derivative_step = 1e-5;

struct IsentropicEquilibria {
    std::vector<EquilibriumPoint> roots; ///< finite roots in increasing a
    /// For T' = 0 the pressure decays to zero from above as a -> infinity:
    /// a marginal equilibrium at infinity, reported symbolically.
    bool marginal_at_infinity = false;
};

/// Net pressure along an isentrope: v from the entropy constraint, then the
/// two-temperature pressure at the implied internal temperature.
inline double casimir_pressure_isentropic(double a, const Isentrope& iso, double T_prime,
                                          const UnitSystem& units = {},
                                          const SeriesControl& ctrl = {},
                                          const RootConfig& rcfg = {},
                                          PressureModel model = PressureModel::full) {
    const double v = v_from_entropy(iso, a, ctrl, rcfg, model);
    const double T = temperature_from_v(a, v, units);
    if (model == PressureModel::asymptotic)
        return internal_state_asymptotic(a, T, units).pressure - radiation_pressure(T_prime, units);
    return casimir_pressure(a, T, T_prime, units, ctrl);
}

/// Net pressure at separation a under the given process constraint.
inline double pressure_along(double a, const ProcessMode& mode, const UnitSystem& units = {},
                             const SeriesControl& ctrl = {}, const RootConfig& rcfg = {}) {
    if (const auto* iso = std::get_if<Isentropic>(&mode.process))
        return casimir_pressure_isentropic(a, iso->iso, mode.T_prime, units, ctrl, rcfg,
                                           iso->model);
    return casimir_pressure(a, std::get<Isothermal>(mode.process).T, mode.T_prime, units, ctrl);
}

/// dP/da at fixed T (isothermal) or fixed sigma (isentropic) by central
/// differences with step 1e-5 a.
inline double pressure_derivative(double a, const ProcessMode& mode,
                                  const UnitSystem& units = {}, const SeriesControl& ctrl = {},
                                  const RootConfig& rcfg = {}) {
    detail::require_positive_a(a);
    const double h = derivative_step * a;
    return (pressure_along(a + h, mode, units, ctrl, rcfg) -
            pressure_along(a - h, mode, units, ctrl, rcfg)) /
           (2.0 * h);
}

inline Stability classify_stability(double a, double slope, const UnitSystem& units = {}) {
    if (a * std::abs(slope) < marginal_slope_threshold * casimir_scale(a, 4, units))
        return Stability::marginal;
    return slope < 0.0 ? Stability::stable : Stability::unstable;
}

namespace detail {

/// Refines a sign change of P between a_lo and a_hi by bisection in ln(a).
inline double refine_root(const ProcessMode& mode, double a_lo, double a_hi, double p_lo,
                          double p_hi, const UnitSystem& units, const SeriesControl& ctrl,
                          const RootConfig& rcfg) {
    auto f = [&](double log_a) { return pressure_along(std::exp(log_a), mode, units, ctrl, rcfg); };
    return std::exp(bisect(f, std::log(a_lo), std::log(a_hi), p_lo, p_hi, rcfg));
}

inline EquilibriumPoint make_point(double a, const ProcessMode& mode, const UnitSystem& units,
                                   const SeriesControl& ctrl, const RootConfig& rcfg) {
    EquilibriumPoint pt;
    pt.a = a;
    if (const auto* iso = std::get_if<Isentropic>(&mode.process)) {
        pt.v = v_from_entropy(iso->iso, a, ctrl, rcfg, iso->model);
        pt.T = temperature_from_v(a, pt.v, units);
    } else {
        pt.T = std::get<Isothermal>(mode.process).T;
        pt.v = reduced_v(a, pt.T, units);
    }
    pt.residual = std::abs(pressure_along(a, mode, units, ctrl, rcfg));
    pt.slope = pressure_derivative(a, mode, units, ctrl, rcfg);
    pt.stability = classify_stability(a, pt.slope, units);
    return pt;
}

inline void require_bracket(double a_lo, double a_hi) {
    require_positive_a(a_lo);
    require_positive_a(a_hi);
    if (!(a_hi > a_lo)) throw DomainError("separation bracket must satisfy a_lo < a_hi");
}

} // namespace detail

/// The unique finite equilibrium of P(a, T, T') at fixed T, or nullopt when
/// none exists (T <= T', or no sign change within the expansion cap).
///
/// P rises monotonically from -infinity at a -> 0 to pi^2 k^4 (T^4 - T'^4) / (45 (hbar c)^3),
/// so the bracket is widened downward while P(a_lo) > 0 and upward while
/// P(a_hi) < 0. Such a root always has dP/da > 0.
inline std::optional<EquilibriumPoint>
find_equilibrium_isothermal(double T, double T_prime, double a_lo, double a_hi,
                            const UnitSystem& units = {}, const SeriesControl& ctrl = {},
                            const RootConfig& rcfg = {}, const ScanConfig& scan = {}) {
    detail::require_temperature(T, "temperature");
    detail::require_temperature(T_prime, "external temperature");
    detail::require_bracket(a_lo, a_hi);
    scan.validate();
    if (T <= T_prime) return std::nullopt;

    const ProcessMode mode{Isothermal{T}, T_prime};
    auto pressure = [&](double a) { return casimir_pressure(a, T, T_prime, units, ctrl); };

    double p_lo = pressure(a_lo);
    for (int i = 0; p_lo > 0.0; ++i) {
        if (i == scan.max_expansions) return std::nullopt;
        a_lo *= 0.5;
        p_lo = pressure(a_lo);
    }
    double p_hi = pressure(a_hi);
    for (int i = 0; p_hi < 0.0; ++i) {
        if (i == scan.max_expansions) return std::nullopt;
        a_hi *= 2.0;
        p_hi = pressure(a_hi);
    }
    const double root = detail::refine_root(mode, a_lo, a_hi, p_lo, p_hi, units, ctrl, rcfg);
    return detail::make_point(root, mode, units, ctrl, rcfg);
}

/// All finite equilibria along an isentrope, found by a dense log-spaced
/// sign scan of P(a) and refined by bisection.
///
/// The lower end is widened while P(a_lo) > 0 (Casimir attraction wins as
/// a -> 0). For T' > 0 the upper end is widened while P(a_hi) > 0, since P
/// tends to -pi^2 k^4 T'^4 / (45 (hbar c)^3) at large a. For T' = 0 the
/// pressure instead decays to zero from above and the equilibrium at
/// infinity is flagged, not solved for.
///
/// Under the asymptotic model the scan starts just above the separation
/// where the asymptotic entropy floor equals sigma.
inline IsentropicEquilibria
find_equilibria_isentropic(const Isentrope& iso, double T_prime, double a_lo, double a_hi,
                           const UnitSystem& units = {}, const SeriesControl& ctrl = {},
                           const RootConfig& rcfg = {}, const ScanConfig& scan = {},
                           PressureModel model = PressureModel::full) {
    detail::require_positive_sigma(iso);
    detail::require_temperature(T_prime, "external temperature");
    detail::require_bracket(a_lo, a_hi);
    scan.validate();

    const ProcessMode mode{Isentropic{iso, model}, T_prime};
    auto pressure = [&](double a) { return pressure_along(a, mode, units, ctrl, rcfg); };

    if (model == PressureModel::asymptotic) {
        const double a_floor = std::sqrt(zeta3_value / (8.0 * pi * iso.sigma)) * (1.0 + 1e-6);
        a_lo = std::max(a_lo, a_floor);
        if (!(a_hi > a_lo)) return {{}, T_prime == 0.0};
    } else {
        for (int i = 0; pressure(a_lo) > 0.0 && i < scan.max_expansions; ++i) a_lo *= 0.5;
    }
    if (T_prime > 0.0)
        for (int i = 0; pressure(a_hi) > 0.0 && i < scan.max_expansions; ++i) a_hi *= 2.0;

    const double decades = std::log10(a_hi / a_lo);
    const auto n = static_cast<std::size_t>(
                       std::ceil(decades * static_cast<double>(scan.points_per_decade))) +
                   1;
    const std::vector<double> grid = log_grid(a_lo, a_hi, std::max<std::size_t>(n, 2));
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = pressure(grid[i]);

    IsentropicEquilibria out;
    out.marginal_at_infinity = T_prime == 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if ((values[i] < 0.0) == (values[i + 1] < 0.0)) continue;
        const double root = detail::refine_root(mode, grid[i], grid[i + 1], values[i],
                                                values[i + 1], units, ctrl, rcfg);
        out.roots.push_back(detail::make_point(root, mode, units, ctrl, rcfg));
    }
    return out;
}

} // namespace casimir
