#pragma once

// Dimensionless special functions of the parallel-plate photon gas:
// the damped Bose series k(x), the thermal function g(v) in its two
// dual representations, and the reduced Casimir pressure p(v).

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

inline constexpr double pi = std::numbers::pi;
inline constexpr double pi2 = pi * pi;
inline constexpr double pi4 = pi2 * pi2;

/// Apery's constant, zeta(3).
inline constexpr double zeta3_value = 1.2020569031595942853997381615114;

/// Damping-argument crossover of the two representations of g(v):
/// 1/v == 4 pi^2 v at v = 1/(2 pi).
inline constexpr double g_switch_v = 1.0 / (2.0 * pi);

/// Truncation policy for the infinite series.
struct SeriesControl {
    double rel_tol = 1e-15;
    std::size_t max_terms = 1'000'000;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0))
            throw DomainError("series rel_tol must lie in (0, 1)");
        if (max_terms < 1) throw DomainError("series max_terms must be >= 1");
    }
};

/// g(v) together with its first and second v-derivatives.
struct GDerivatives {
    double g = 0.0;
    double dg = 0.0;
    double d2g = 0.0;
};

/// k(x) together with its first and second x-derivatives.
struct KSeries {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

constexpr double zeta3() noexcept { return zeta3_value; }

namespace detail {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double term) noexcept {
        const double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term))
            comp_ += (sum_ - t) + term;
        else
            comp_ += (term - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline bool negligible(double term, double partial, double rel_tol) noexcept {
    return term == 0.0 || std::abs(term) <= rel_tol * std::abs(partial);
}

/// Sums k and its derivatives up to `order` (0, 1 or 2) term by term.
///
/// With y = n x, u = exp(-y), d = 1 - u the summands are
///   k   : u / (n^3 d) + x u / (n^2 d^2)
///   k'  : -x u (1 + u) / (n d^3)
///   k'' : -u (1 + u) / (n d^3) + x u (1 + 4u + u^2) / d^4
inline KSeries k_series(double x, const SeriesControl& ctrl, int order) {
    if (!(x > 0.0))
        throw DomainError("k(x) requires x > 0, got " + std::to_string(x));
    ctrl.validate();

    CompensatedSum s0, s1, s2;
    int quiet = 0;
    for (std::size_t n = 1; n <= ctrl.max_terms; ++n) {
        const double dn = static_cast<double>(n);
        const double y = dn * x;
        const double u = std::exp(-y);
        const double d = -std::expm1(-y);

        const double t0 = u / (dn * dn * dn * d) + x * u / (dn * dn * d * d);
        s0.add(t0);
        bool small = negligible(t0, s0.value(), ctrl.rel_tol);

        if (order >= 1) {
            const double d3 = d * d * d;
            const double t1 = -x * u * (1.0 + u) / (dn * d3);
            s1.add(t1);
            small = small && negligible(t1, s1.value(), ctrl.rel_tol);
            if (order >= 2) {
                const double t2 = -u * (1.0 + u) / (dn * d3) +
                                  x * u * (1.0 + u * (4.0 + u)) / (d3 * d);
                s2.add(t2);
                small = small && negligible(t2, s2.value(), ctrl.rel_tol);
            }
        }

        quiet = small ? quiet + 1 : 0;
        if (quiet >= 2) return {s0.value(), s1.value(), s2.value()};
    }
    throw ConvergenceError("k(x) series did not converge within " +
                           std::to_string(ctrl.max_terms) + " terms at x = " +
                           std::to_string(x));
}

inline void require_nonnegative_v(double v, const char* what) {
    if (!(v >= 0.0))
        throw DomainError(std::string(what) + " requires v >= 0, got " + std::to_string(v));
}

inline void require_positive_v(double v, const char* what) {
    if (!(v > 0.0))
        throw DomainError(std::string(what) + " requires v > 0, got " + std::to_string(v));
}

} // namespace detail

/// k(x) = (1 - x d/dx) sum_n n^-3 / (exp(n x) - 1).
inline double k_fun(double x, const SeriesControl& ctrl = {}) {
    return detail::k_series(x, ctrl, 0).value;
}

/// dk/dx, summed from the term-wise derivative of the series.
inline double k_deriv(double x, const SeriesControl& ctrl = {}) {
    return detail::k_series(x, ctrl, 1).d1;
}

/// k, k' and k'' from a single pass over the series.
inline KSeries k_all(double x, const SeriesControl& ctrl = {}) {
    return detail::k_series(x, ctrl, 2);
}

/// g(v) = -v^3 [zeta(3)/2 + k(1/v)]; rapidly convergent for small v.
inline GDerivatives g_small_rep(double v, const SeriesControl& ctrl = {}) {
    detail::require_positive_v(v, "g_small_rep");
    const KSeries k = k_all(1.0 / v, ctrl);
    const double bracket = 0.5 * zeta3_value + k.value;
    return {
        -v * v * v * bracket,
        -3.0 * v * v * bracket + v * k.d1,
        -6.0 * v * bracket + 4.0 * k.d1 - k.d2 / v,
    };
}

/// g(v) = 1/720 - pi^4 v^4 / 45 - v/(4 pi^2) [zeta(3)/2 + k(4 pi^2 v)];
/// rapidly convergent for large v.
inline GDerivatives g_large_rep(double v, const SeriesControl& ctrl = {}) {
    detail::require_positive_v(v, "g_large_rep");
    const double y = 4.0 * pi2 * v;
    const KSeries k = k_all(y, ctrl);
    const double bracket = 0.5 * zeta3_value + k.value;
    return {
        1.0 / 720.0 - pi4 * v * v * v * v / 45.0 - v * bracket / (4.0 * pi2),
        -4.0 * pi4 * v * v * v / 45.0 - bracket / (4.0 * pi2) - v * k.d1,
        -12.0 * pi4 * v * v / 45.0 - 2.0 * k.d1 - 4.0 * pi2 * v * k.d2,
    };
}

/// Evaluates g with whichever representation has the larger damping
/// argument. g(0) and its derivatives vanish.
inline GDerivatives g_eval(double v, const SeriesControl& ctrl = {}) {
    detail::require_nonnegative_v(v, "g_eval");
    if (v == 0.0) return {};
    return v <= g_switch_v ? g_small_rep(v, ctrl) : g_large_rep(v, ctrl);
}

/// Reduced Casimir pressure p(v) with the black-body v^4 part removed:
///   p(v) = -v [zeta(3) + 2 k(4 pi^2 v) - 4 pi^2 v k'(4 pi^2 v)] / (4 pi^2)
///        = -1/240 + 3 g - v g' - pi^4 v^4 / 45.
/// The first form is used for v >= 1/(2 pi), the second (with the small-v
/// representation of g) below. p(0) = -1/240.
inline double p_reduced(double v, const SeriesControl& ctrl = {}) {
    detail::require_nonnegative_v(v, "p_reduced");
    if (v == 0.0) return -1.0 / 240.0;
    if (v >= g_switch_v) {
        const double y = 4.0 * pi2 * v;
        const KSeries k = detail::k_series(y, ctrl, 1);
        return -v * (zeta3_value + 2.0 * k.value - y * k.d1) / (4.0 * pi2);
    }
    const GDerivatives g = g_small_rep(v, ctrl);
    return -1.0 / 240.0 + 3.0 * g.g - v * g.dg - pi4 * v * v * v * v / 45.0;
}

/// p(v) assembled from g_eval via the second algebraic form, for all v.
inline double p_reduced_from_g(double v, const SeriesControl& ctrl = {}) {
    detail::require_nonnegative_v(v, "p_reduced_from_g");
    const GDerivatives g = g_eval(v, ctrl);
    return -1.0 / 240.0 + 3.0 * g.g - v * g.dg - pi4 * v * v * v * v / 45.0;
}

} // namespace casimir
