#pragma once

// Command-line front end: eval, state, isentrope and equilibrium.
//
// Exit codes: 0 success (including an empty equilibrium list), 2 invalid
// arguments or domain errors, 3 numerical convergence failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/equilibrium.hpp"
#include "casimir/errors.hpp"
#include "casimir/pressure.hpp"
#include "casimir/processes.hpp"
#include "casimir/report.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/thermo_state.hpp"
#include "casimir/units.hpp"

namespace casimir::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_convergence = 3;

struct RunConfig {
    std::string units = "reduced";
    std::string format = "pretty";
    double rel_tol = SeriesControl{}.rel_tol;
    std::string out_path; ///< empty means standard output

    UnitSystem unit_system() const { return UnitSystem::parse(units); }
    SeriesControl series() const {
        SeriesControl c;
        c.rel_tol = rel_tol;
        c.validate();
        return c;
    }
};

namespace detail {

using report::Cell;
using report::Fields;
using report::Table;

inline Fields config_fields(const RunConfig& cfg, const RootConfig& rcfg) {
    return {
        {"units", cfg.units},
        {"rel_tol", cfg.rel_tol},
        {"max_terms", static_cast<long long>(SeriesControl{}.max_terms)},
        {"root_abs_tol", rcfg.abs_tol},
        {"root_rel_tol", rcfg.rel_tol},
        {"root_max_iter", static_cast<long long>(rcfg.max_iter)},
    };
}

inline Table cmd_eval(double v, const RunConfig& cfg) {
    const SeriesControl ctrl = cfg.series();
    const GDerivatives g = g_eval(v, ctrl);
    const double p = p_reduced(v, ctrl);

    std::string rep = "limit";
    double x_small = std::numeric_limits<double>::infinity();
    double x_large = 0.0;
    double k_small = 0.0;
    double k_large = std::numeric_limits<double>::infinity();
    if (v > 0.0) {
        rep = v <= g_switch_v ? "small" : "large";
        x_small = 1.0 / v;
        x_large = 4.0 * pi2 * v;
        k_small = k_fun(x_small, ctrl);
        k_large = k_fun(x_large, ctrl);
    }

    Table t;
    t.command = "eval";
    t.inputs = {{"v", v}};
    t.config = config_fields(cfg, RootConfig{});
    t.columns = {"v", "representation", "g", "dg", "d2g", "x_small", "k_small",
                 "x_large", "k_large", "p"};
    t.rows.push_back({v, rep, g.g, g.dg, g.d2g, x_small, k_small, x_large, k_large, p});
    return t;
}

inline Table cmd_state(double a, double T, double T_prime, const RunConfig& cfg) {
    const UnitSystem units = cfg.unit_system();
    const SeriesControl ctrl = cfg.series();
    const PlateState s = PlateState::make(a, T, T_prime, units);
    const ThermoQuantities in = internal_state(a, T, units, ctrl);
    const ThermoQuantities ex = external_state(T_prime, units);
    const double net = casimir_pressure(a, T, T_prime, units, ctrl);

    Table t;
    t.command = "state";
    t.inputs = {{"a", a}, {"T", T}, {"Tprime", T_prime}};
    t.config = config_fields(cfg, RootConfig{});
    t.columns = {"a", "T", "Tprime", "v", "vprime", "phi_int", "e_int", "sigma_int", "p_int",
                 "phi_ext", "e_ext", "sigma_ext", "p_ext", "P_net"};
    t.rows.push_back({s.a, s.T, s.T_prime, s.v, s.v_prime, in.free_energy, in.energy,
                      in.entropy_per_k, in.pressure, ex.free_energy, ex.energy,
                      ex.entropy_per_k, ex.pressure, net});
    t.notes = {"internal: per unit plate area; external: per unit volume",
               "P_net = p_int - p_ext (positive pushes the plate outward)"};
    return t;
}

inline Table cmd_isentrope(double sigma, double a_min, double a_max, int n, double T_prime,
                           const RunConfig& cfg) {
    const UnitSystem units = cfg.unit_system();
    const SeriesControl ctrl = cfg.series();
    const RootConfig rcfg;
    if (!(a_min > 0.0) || !(a_max > a_min))
        throw DomainError("isentrope requires 0 < a-min < a-max");
    if (n < 2) throw DomainError("isentrope requires --n >= 2");

    const Isentrope iso{sigma};
    iso.validate();
    const std::vector<double> grid = log_grid(a_min, a_max, static_cast<std::size_t>(n));
    const std::vector<IsentropeSample> samples =
        trace_isentrope(iso, grid, T_prime, units, ctrl, rcfg);
    const double t_limit = sigma > 0.0 ? limit_temperature(iso, units) : 0.0;

    Table t;
    t.command = "isentrope";
    t.inputs = {{"sigma", sigma},
                {"a_min", a_min},
                {"a_max", a_max},
                {"n", static_cast<long long>(n)},
                {"Tprime", T_prime}};
    t.config = config_fields(cfg, rcfg);
    t.columns = {"a", "v", "T", "P_internal", "P_net"};
    for (const auto& s : samples)
        t.rows.push_back({s.a, s.v, s.T, s.pressure_internal, s.pressure_net});
    t.metadata = {{"limit_temperature", t_limit}};
    return t;
}

struct EquilibriumArgs {
    std::string mode;
    std::optional<double> T;
    std::optional<double> sigma;
    double T_prime = 0.0;
    std::optional<double> a_min;
    std::optional<double> a_max;
    int points_per_decade = static_cast<int>(ScanConfig{}.points_per_decade);
};

inline Table cmd_equilibrium(const EquilibriumArgs& args, const RunConfig& cfg) {
    const UnitSystem units = cfg.unit_system();
    const SeriesControl ctrl = cfg.series();
    const RootConfig rcfg;
    if (args.points_per_decade < 1) throw DomainError("--points-per-decade must be >= 1");
    ScanConfig scan;
    scan.points_per_decade = static_cast<std::size_t>(args.points_per_decade);

    Table t;
    t.command = "equilibrium";
    t.config = config_fields(cfg, rcfg);
    t.config.emplace_back("points_per_decade", static_cast<long long>(args.points_per_decade));
    t.columns = {"a", "v", "T", "stability", "residual", "slope"};

    // Default bracket: two decades either side of the natural length scale,
    // hbar c / (k T) for fixed T and sigma^(-1/2) for fixed entropy.
    std::vector<EquilibriumPoint> roots;
    bool at_infinity = false;
    double scale = 1.0;
    if (args.mode == "isothermal") {
        if (!args.T) throw DomainError("isothermal mode requires --T");
        casimir::detail::require_temperature(*args.T, "temperature");
        if (*args.T > 0.0) scale = units.hbar_c() / (units.k_boltzmann * *args.T);
        const double lo = args.a_min.value_or(1e-2 * scale);
        const double hi = args.a_max.value_or(1e2 * scale);
        t.inputs = {{"mode", args.mode}, {"T", *args.T}, {"Tprime", args.T_prime},
                    {"a_min", lo}, {"a_max", hi}};
        if (auto pt = find_equilibrium_isothermal(*args.T, args.T_prime, lo, hi, units, ctrl,
                                                  rcfg, scan))
            roots.push_back(*pt);
    } else if (args.mode == "isentropic") {
        if (!args.sigma) throw DomainError("isentropic mode requires --sigma");
        const Isentrope iso{*args.sigma};
        casimir::detail::require_positive_sigma(iso);
        scale = 1.0 / std::sqrt(iso.sigma);
        const double lo = args.a_min.value_or(1e-2 * scale);
        const double hi = args.a_max.value_or(1e2 * scale);
        t.inputs = {{"mode", args.mode}, {"sigma", *args.sigma}, {"Tprime", args.T_prime},
                    {"a_min", lo}, {"a_max", hi}};
        const IsentropicEquilibria eq =
            find_equilibria_isentropic(iso, args.T_prime, lo, hi, units, ctrl, rcfg, scan);
        roots = eq.roots;
        at_infinity = eq.marginal_at_infinity;
    } else {
        throw DomainError("--mode must be isothermal or isentropic");
    }

    for (const auto& r : roots)
        t.rows.push_back({r.a, r.v, r.T, std::string(to_string(r.stability)), r.residual,
                          r.slope});
    t.metadata = {{"count", static_cast<long long>(roots.size())},
                  {"marginal_at_infinity", at_infinity}};
    if (roots.empty()) t.notes.push_back("no finite equilibrium");
    if (at_infinity) t.notes.push_back("marginal equilibrium at a -> infinity");
    return t;
}

inline int emit(const Table& t, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const report::Format fmt = report::parse_format(cfg.format);
    if (cfg.out_path.empty()) {
        report::write(out, t, fmt);
        return exit_ok;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << cfg.out_path << "'\n";
        return exit_invalid;
    }
    report::write(file, t, fmt);
    return exit_ok;
}

} // namespace detail

/// Parses arguments and runs one subcommand, writing to `out` and `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-temperature Casimir thermodynamics"};
    app.name("casimir");
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--units", cfg.units, "Unit system")
        ->check(CLI::IsMember({"reduced", "si"}))
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}))
        ->capture_default_str();
    app.add_option("--rel-tol", cfg.rel_tol, "Series truncation tolerance")->capture_default_str();
    app.add_option("--out", cfg.out_path, "Output file (default: standard output)");

    std::function<detail::Table()> action;

    double v = 0.0;
    auto* eval = app.add_subcommand("eval", "Evaluate g(v), its derivatives, k and p(v)");
    eval->add_option("--v", v, "Reduced variable v >= 0")->required();
    eval->callback([&] { action = [&] { return detail::cmd_eval(v, cfg); }; });

    double a = 1.0, T = 0.0, T_prime = 0.0;
    auto* state = app.add_subcommand("state", "Internal/external state and net pressure");
    state->add_option("--a", a, "Plate separation")->required();
    state->add_option("--T", T, "Internal temperature")->required();
    state->add_option("--Tprime", T_prime, "External temperature")->capture_default_str();
    state->callback([&] { action = [&] { return detail::cmd_state(a, T, T_prime, cfg); }; });

    double sigma = 1.0, a_min = 1e-4, a_max = 10.0;
    int n_points = 100;
    double iso_T_prime = 0.0;
    auto* isentrope = app.add_subcommand("isentrope", "Trace an isentrope on a log grid");
    isentrope->add_option("--sigma", sigma, "Entropy per plate area per k")->required();
    isentrope->add_option("--a-min", a_min, "Smallest separation")->capture_default_str();
    isentrope->add_option("--a-max", a_max, "Largest separation")->capture_default_str();
    isentrope->add_option("--n", n_points, "Number of grid points")->capture_default_str();
    isentrope->add_option("--Tprime", iso_T_prime, "External temperature")
        ->capture_default_str();
    isentrope->callback([&] {
        action = [&] {
            return detail::cmd_isentrope(sigma, a_min, a_max, n_points, iso_T_prime, cfg);
        };
    });

    detail::EquilibriumArgs eq;
    auto* equilibrium = app.add_subcommand("equilibrium", "Find and classify equilibria");
    equilibrium->add_option("--mode", eq.mode, "isothermal or isentropic")
        ->required()
        ->check(CLI::IsMember({"isothermal", "isentropic"}));
    equilibrium->add_option("--T", eq.T, "Internal temperature (isothermal)");
    equilibrium->add_option("--sigma", eq.sigma, "Entropy per area per k (isentropic)");
    equilibrium->add_option("--Tprime", eq.T_prime, "External temperature")
        ->capture_default_str();
    equilibrium->add_option("--a-min", eq.a_min, "Lower end of the search bracket");
    equilibrium->add_option("--a-max", eq.a_max, "Upper end of the search bracket");
    equilibrium->add_option("--points-per-decade", eq.points_per_decade,
                            "Sign-scan resolution")
        ->capture_default_str();
    equilibrium->callback([&] { action = [&] { return detail::cmd_equilibrium(eq, cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        return detail::emit(action(), cfg, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_convergence;
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("casimir");
    for (const auto& s : args) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace casimir::cli
