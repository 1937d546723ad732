#pragma once

#include <string_view>

#include "casimir/errors.hpp"

namespace casimir {

/// Physical constants used to convert between dimensional inputs and the
/// reduced variable v = a T k / (hbar pi c).
///
/// In reduced mode hbar = c = k = 1, so lengths and inverse temperatures
/// share one unit. SI mode uses the exact post-2019 CODATA values.
struct UnitSystem {
    enum class Mode { reduced, si };

    Mode mode = Mode::reduced;
    double hbar = 1.0;
    double c = 1.0;
    double k_boltzmann = 1.0;

    static constexpr UnitSystem reduced() noexcept { return {}; }

    static constexpr UnitSystem si() noexcept {
        return {Mode::si, 1.054571817e-34, 2.99792458e8, 1.380649e-23};
    }

    constexpr double hbar_c() const noexcept { return hbar * c; }

    static UnitSystem parse(std::string_view name) {
        if (name == "reduced") return reduced();
        if (name == "si") return si();
        throw DomainError("unknown unit system '" + std::string(name) + "'");
    }

    constexpr std::string_view name() const noexcept {
        return mode == Mode::si ? "si" : "reduced";
    }
};

} // namespace casimir
