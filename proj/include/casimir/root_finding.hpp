#pragma once

#include <cmath>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

/// Tolerances for bracketing solvers. A bracket [lo, hi] is accepted once
/// hi - lo <= abs_tol + rel_tol * |midpoint|, or when it can no longer be
/// split in binary64.
struct RootConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-13;
    int max_iter = 200;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw DomainError("root tolerances must be positive");
        if (max_iter < 1) throw DomainError("root max_iter must be >= 1");
    }
};

/// Bisection on [lo, hi] where f(lo) and f(hi) have opposite signs (or one
/// of them is zero). Returns the midpoint of the final bracket.
template <class F>
double bisect(F&& f, double lo, double hi, double f_lo, double f_hi, const RootConfig& cfg) {
    cfg.validate();
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo < 0.0) == (f_hi < 0.0))
        throw DomainError("bisect: bracket [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] does not straddle a sign change");

    const bool rising = f_lo < 0.0;
    for (int it = 0; it < cfg.max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= cfg.abs_tol + cfg.rel_tol * std::abs(mid) || mid <= lo || mid >= hi)
            return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == rising)
            lo = mid;
        else
            hi = mid;
    }
    throw ConvergenceError("bisect: no convergence after " + std::to_string(cfg.max_iter) +
                           " iterations");
}

template <class F>
double bisect(F&& f, double lo, double hi, const RootConfig& cfg) {
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    return bisect(f, lo, hi, f_lo, f_hi, cfg);
}

} // namespace casimir
