#pragma once

// Isentropic processes of the internal region: T(a) at fixed entropy per
// plate area, the finite a -> 0 limiting temperature, and trajectories.

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/pressure.hpp"
#include "casimir/root_finding.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/thermo_state.hpp"
#include "casimir/units.hpp"

namespace casimir {

/// Which description of the internal region to use along a process.
/// `asymptotic` replaces g by its large-v form in both the entropy and
/// the pressure.
enum class PressureModel { full, asymptotic };

/// A process at fixed entropy per plate area per k. sigma == 0 is the
/// trivial T == 0 process.
struct Isentrope {
    double sigma = 1.0;

    void validate() const {
        if (!(sigma >= 0.0 && std::isfinite(sigma)))
            throw DomainError("isentrope sigma must be non-negative and finite, got " +
                              std::to_string(sigma));
    }
};

struct IsentropeSample {
    double a = 0.0;
    double v = 0.0;
    double T = 0.0;
    double pressure_internal = 0.0;
    double pressure_net = 0.0;
};

namespace detail {

/// sigma a^2 / pi as a function of v.
inline double reduced_entropy(double v, PressureModel model, const SeriesControl& ctrl) {
    if (model == PressureModel::asymptotic)
        return 4.0 * pi4 * v * v * v / 45.0 + zeta3_value / (8.0 * pi2);
    return -g_eval(v, ctrl).dg;
}

inline void require_positive_sigma(const Isentrope& iso) {
    iso.validate();
    if (!(iso.sigma > 0.0))
        throw DomainError("isentrope sigma must be positive, got " + std::to_string(iso.sigma));
}

inline constexpr int max_bracket_doublings = 128;

} // namespace detail

/// sigma = -(pi / a^2) dg/dv.
inline double entropy_of_v(double a, double v, const SeriesControl& ctrl = {},
                           PressureModel model = PressureModel::full) {
    detail::require_positive_a(a);
    detail::require_nonnegative_v(v, "entropy_of_v");
    return pi / (a * a) * detail::reduced_entropy(v, model, ctrl);
}

/// T = v hbar pi c / (a k).
inline double temperature_from_v(double a, double v, const UnitSystem& units = {}) {
    detail::require_positive_a(a);
    detail::require_nonnegative_v(v, "temperature_from_v");
    return v * units.hbar_c() * pi / (a * units.k_boltzmann);
}

/// The unique v >= 0 whose internal entropy at separation a equals
/// iso.sigma. -dg/dv is strictly increasing, so a bracket [2^-m, 2^n] is
/// found by doubling/halving from v = 1 and refined by bisection in ln(v),
/// which keeps the result relatively accurate for v << 1.
///
/// Under the asymptotic model the entropy has the floor pi zeta(3)/(8 pi^2 a^2);
/// smaller targets have no solution and raise DomainError.
inline double v_from_entropy(const Isentrope& iso, double a, const SeriesControl& ctrl = {},
                             const RootConfig& rcfg = {},
                             PressureModel model = PressureModel::full) {
    detail::require_positive_a(a);
    detail::require_positive_sigma(iso);
    rcfg.validate();
    const double target = iso.sigma * a * a / pi;
    auto residual = [&](double v) { return detail::reduced_entropy(v, model, ctrl) - target; };

    if (residual(0.0) > 0.0)
        throw DomainError("entropy " + std::to_string(iso.sigma) +
                          " is below the asymptotic floor at a = " + std::to_string(a));

    double lo = 1.0, hi = 1.0;
    double f_lo = residual(1.0), f_hi = f_lo;
    if (f_hi < 0.0) {
        for (int i = 0; f_hi < 0.0; ++i) {
            if (i == detail::max_bracket_doublings)
                throw ConvergenceError("v_from_entropy: bracket growth cap reached at a = " +
                                       std::to_string(a));
            lo = hi;
            f_lo = f_hi;
            hi *= 2.0;
            f_hi = residual(hi);
        }
    } else {
        while (f_lo >= 0.0) {
            // below the smallest normal double v is indistinguishable from 0
            if (lo < std::numeric_limits<double>::min()) return lo;
            hi = lo;
            f_hi = f_lo;
            lo *= 0.5;
            f_lo = residual(lo);
        }
    }
    auto in_log = [&](double u) { return residual(std::exp(u)); };
    return std::exp(bisect(in_log, std::log(lo), std::log(hi), f_lo, f_hi, rcfg));
}

/// Limiting internal temperature as a -> 0 along an isentrope:
/// T = sqrt(2 pi sigma hbar^2 c^2 / (3 zeta(3) k^2)).
inline double limit_temperature(const Isentrope& iso, const UnitSystem& units = {}) {
    detail::require_positive_sigma(iso);
    const double hc_over_k = units.hbar_c() / units.k_boltzmann;
    return std::sqrt(2.0 * pi * iso.sigma / (3.0 * zeta3_value)) * hc_over_k;
}

/// One point of an isentrope. A zero-entropy isentrope yields T = 0.
inline IsentropeSample isentrope_sample(const Isentrope& iso, double a, double T_prime,
                                        const UnitSystem& units = {},
                                        const SeriesControl& ctrl = {},
                                        const RootConfig& rcfg = {}) {
    iso.validate();
    detail::require_positive_a(a);
    detail::require_temperature(T_prime, "external temperature");
    const double v = iso.sigma == 0.0 ? 0.0 : v_from_entropy(iso, a, ctrl, rcfg);
    const double T = temperature_from_v(a, v, units);
    const double internal = internal_pressure(a, T, units, ctrl);
    return {a, v, T, internal, internal - radiation_pressure(T_prime, units)};
}

/// Samples the isentrope on a caller-supplied, strictly increasing grid of
/// separations. Each sample depends only on (sigma, a_i, T').
inline std::vector<IsentropeSample> trace_isentrope(const Isentrope& iso,
                                                    std::span<const double> a_grid,
                                                    double T_prime,
                                                    const UnitSystem& units = {},
                                                    const SeriesControl& ctrl = {},
                                                    const RootConfig& rcfg = {}) {
    iso.validate();
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
        detail::require_positive_a(a_grid[i]);
        if (i > 0 && !(a_grid[i] > a_grid[i - 1]))
            throw DomainError("trace_isentrope: a_grid must be strictly increasing");
    }

    std::vector<IsentropeSample> out;
    out.reserve(a_grid.size());
    for (double a : a_grid) {
        try {
            out.push_back(isentrope_sample(iso, a, T_prime, units, ctrl, rcfg));
        } catch (const ConvergenceError& e) {
            throw ConvergenceError("isentrope sample at a = " + std::to_string(a) + ": " +
                                   e.what());
        } catch (const DomainError& e) {
            throw DomainError("isentrope sample at a = " + std::to_string(a) + ": " + e.what());
        }
    }
    return out;
}

/// n log-spaced points from lo to hi inclusive.
inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo)) throw DomainError("log_grid requires 0 < lo < hi");
    if (n < 2) throw DomainError("log_grid requires at least two points");
    std::vector<double> grid(n);
    const double step = std::log(hi / lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) grid[i] = lo * std::exp(step * static_cast<double>(i));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

} // namespace casimir
