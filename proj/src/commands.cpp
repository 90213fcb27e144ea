#include "laserfel/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>

#include "laserfel/gain.hpp"
#include "laserfel/parallel.hpp"
#include "laserfel/quantum_limits.hpp"

namespace laserfel::cli {

namespace {

using units::IntensityConvention;

struct Evaluation {
    const CaseConfig& config;
    LaserParams laser;
    BeamParams beam;
    RadiationWave wave;
    GainResult gain;
    std::optional<QuantumLimits> limits;
};

struct Quantity {
    std::string name;
    bool needs_limits;
    std::function<Cell(const Evaluation&)> get;
};

const CriticalIntensityEntry& selected(const Evaluation& e) {
    return e.limits->critical.entry(e.config.modes.intensity_convention);
}

const std::vector<Quantity>& quantities() {
    using E = const Evaluation&;
    static const std::vector<Quantity> q{
        {"gain_exact", false, [](E e) -> Cell { return e.gain.gain_exact; }},
        {"gain_paper", false, [](E e) -> Cell { return e.gain.gain_paper; }},
        {"gain_factor", false, [](E e) -> Cell { return e.gain.gain_factor; }},
        {"feasible", false, [](E e) -> Cell { return e.gain.feasible; }},
        {"lambda_g_nm", false, [](E e) -> Cell { return e.wave.wavelength() / units::kCmPerNanometer; }},
        {"photon_energy_keV", false, [](E e) -> Cell { return e.wave.photon_energy_keV(); }},
        {"growth_rate_exact", false, [](E e) -> Cell { return e.gain.growth_rate_exact; }},
        {"growth_rate_paper", false, [](E e) -> Cell { return e.gain.growth_rate_paper; }},
        {"gain_method", false, [](E e) -> Cell { return to_string(e.gain.modes.method); }},
        {"threshold_product", false, [](E e) -> Cell { return e.gain.threshold_product; }},
        {"slope", false, [](E e) -> Cell { return e.gain.slope.slope; }},
        {"slope_velocity", false, [](E e) -> Cell { return e.gain.slope.velocity; }},
        {"slope_at_resonance", false, [](E e) -> Cell { return e.gain.slope.used_resonance; }},
        {"kappa_sq", false,
         [](E e) -> Cell { return kappa_sq(e.laser, e.beam, e.config.modes.kappa); }},
        {"a0", false, [](E e) -> Cell { return e.laser.a0(); }},
        {"quiver_amplitude", false,
         [](E e) -> Cell { return quiver_velocity(e.laser, e.beam).amplitude; }},
        {"k_g", false, [](E e) -> Cell { return e.wave.k_g(); }},
        {"omega_g", false, [](E e) -> Cell { return e.wave.omega_g(); }},
        {"velocity_spread", false, [](E e) -> Cell { return e.beam.velocity_spread(); }},
        {"omega0_tau", false, [](E e) -> Cell { return e.laser.omega0_tau(); }},

        {"gamma_min", true, [](E e) -> Cell { return e.limits->gamma_threshold; }},
        {"diffraction_relevant", true, [](E e) -> Cell { return e.limits->diffraction_relevant; }},
        {"omega_m", true, [](E e) -> Cell { return e.limits->frame.omega_m; }},
        {"E_m", true, [](E e) -> Cell { return e.limits->frame.E_m; }},
        {"T", true, [](E e) -> Cell { return e.limits->frame.T; }},
        {"tau_g", true, [](E e) -> Cell { return e.limits->critical.tau_g; }},
        {"I_C", true, [](E e) -> Cell { return selected(e).I_C; }},
        {"max_energy_ratio", true, [](E e) -> Cell { return selected(e).max_energy_ratio; }},
        {"I_C_flux", true, [](E e) -> Cell { return e.limits->critical.flux.I_C; }},
        {"I_C_paper", true, [](E e) -> Cell { return e.limits->critical.paper_literal.I_C; }},
        {"max_energy_ratio_flux", true,
         [](E e) -> Cell { return e.limits->critical.flux.max_energy_ratio; }},
        {"max_energy_ratio_paper", true,
         [](E e) -> Cell { return e.limits->critical.paper_literal.max_energy_ratio; }},
        {"I_C_printed_flux", true, [](E e) -> Cell { return e.limits->critical.flux.I_C_printed; }},
        {"I_C_printed_paper", true,
         [](E e) -> Cell { return e.limits->critical.paper_literal.I_C_printed; }},
        {"max_energy_ratio_printed_flux", true,
         [](E e) -> Cell { return e.limits->critical.flux.max_energy_ratio_printed; }},
        {"max_energy_ratio_printed_paper", true,
         [](E e) -> Cell { return e.limits->critical.paper_literal.max_energy_ratio_printed; }},
        {"energy_ratio_divergent", true, [](E e) -> Cell { return selected(e).diverges; }},
        {"energy_ratio_printed_divergent", true,
         [](E e) -> Cell { return selected(e).diverges_printed; }},
        {"dE_L_boundary", true, [](E e) -> Cell { return e.limits->critical.dE_L_boundary; }},
        {"warning", true,
         [](E e) -> Cell {
             return std::string(e.limits->high_intensity_warning ? kHighIntensityWarning : "");
         }},
    };
    return q;
}

const Quantity& find_quantity(const std::string& name) {
    for (const auto& q : quantities())
        if (q.name == name) return q;
    throw ConfigError("unknown output '" + name + "'", 0, "outputs");
}

Evaluation evaluate(const CaseConfig& c, bool with_limits) {
    const auto laser = c.laser();
    const auto beam = c.beam();
    const auto wave = resonant_radiation(laser, beam, c.modes.resonance);
    Evaluation e{c, laser, beam, wave,
                 evaluate_gain(laser, beam, VelocityDistribution::from_beam(beam), c.gain_modes()),
                 std::nullopt};
    if (with_limits) e.limits = evaluate_limits(laser, beam, c.modes.boost);
    return e;
}

std::string printf_string(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

}  // namespace

const std::vector<std::string>& gain_columns() {
    static const std::vector<std::string> cols{"gain_exact",        "gain_paper",        "gain_factor",
                                               "feasible",          "lambda_g_nm",       "photon_energy_keV",
                                               "growth_rate_exact", "growth_rate_paper", "gain_method"};
    return cols;
}

const std::vector<std::string>& limits_columns() {
    static const std::vector<std::string> cols{
        "gamma_min",        "diffraction_relevant",  "tau_g",
        "I_C",              "max_energy_ratio",      "I_C_flux",
        "I_C_paper",        "max_energy_ratio_flux", "max_energy_ratio_paper",
        "I_C_printed_flux", "I_C_printed_paper",     "energy_ratio_divergent",
        "warning"};
    return cols;
}

std::vector<std::string> available_outputs() {
    std::vector<std::string> out;
    for (const auto& q : quantities()) out.push_back(q.name);
    return out;
}

Table cmd_scan(const ScanConfig& scan, unsigned threads) {
    validate(scan.base);
    if (scan.axes.size() > kMaxAxes) throw ConfigError("too many scan axes");
    const auto& names = scan.outputs.empty() ? gain_columns() : scan.outputs;
    std::vector<const Quantity*> outputs;
    bool with_limits = false;
    for (const auto& name : names) {
        outputs.push_back(&find_quantity(name));
        with_limits = with_limits || outputs.back()->needs_limits;
    }

    std::size_t total = 1;
    for (const auto& axis : scan.axes) {
        if (axis.values.empty()) throw ConfigError("scan axis has no values", 0, axis.field);
        total *= axis.values.size();
        if (total > kMaxGridPoints) throw ConfigError("scan grid exceeds the point limit");
        for (double v : axis.values) validate_case_field(axis.field, v);
    }
    if (with_limits) {
        bool intensity_ok = scan.base.intensity_W_cm2 > 0.0;
        for (const auto& axis : scan.axes)
            if (axis.field == "intensity_W_cm2")
                intensity_ok = std::all_of(axis.values.begin(), axis.values.end(),
                                           [](double v) { return v > 0.0; });
        if (!intensity_ok)
            throw ConfigError("quantum-limit outputs need intensity_W_cm2 > 0", 0, "intensity_W_cm2");
    }

    Table table;
    for (const auto& axis : scan.axes) table.columns.push_back(axis.field);
    table.columns.insert(table.columns.end(), names.begin(), names.end());
    table.rows.resize(total);

    constexpr std::size_t kChunk = 256;
    const std::size_t n_chunks = (total + kChunk - 1) / kChunk;
    std::vector<std::exception_ptr> errors(n_chunks);
    parallel_chunks(n_chunks, threads, [&](std::size_t chunk) {
        try {
            const std::size_t end = std::min(total, (chunk + 1) * kChunk);
            for (std::size_t i = chunk * kChunk; i < end; ++i) {
                CaseConfig c = scan.base;
                auto& row = table.rows[i];
                row.reserve(table.columns.size());
                std::size_t rest = i;
                std::vector<double> coords(scan.axes.size());
                for (std::size_t a = scan.axes.size(); a-- > 0;) {
                    const auto& axis = scan.axes[a];
                    coords[a] = axis.values[rest % axis.values.size()];
                    rest /= axis.values.size();
                    set_case_field(c, axis.field, coords[a]);
                }
                for (double v : coords) row.emplace_back(v);
                const auto e = evaluate(c, with_limits);
                for (const auto* q : outputs) row.push_back(q->get(e));
            }
        } catch (...) {
            errors[chunk] = std::current_exception();
        }
    });
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return table;
}

Table cmd_gain(const CaseConfig& c) { return cmd_scan(ScanConfig{c, {}, {}}, 1); }

Table cmd_limits(const CaseConfig& c) { return cmd_scan(ScanConfig{c, {}, limits_columns()}, 1); }

SimulationInputs simulation_inputs(const SimulationConfig& sim) {
    validate(sim.base);
    const auto laser = sim.base.laser();
    const auto beam = sim.base.beam();
    if (!(laser.field() > 0.0)) throw ConfigError("simulation needs intensity_W_cm2 > 0");
    if (!(beam.density() > 0.0)) throw ConfigError("simulation needs density_cm3 > 0");
    auto dist = VelocityDistribution::from_beam(beam);
    if (sim.mean_offset_spreads) {
        const double v_res = resonant_radiation(laser, beam, sim.ensemble.resonance).resonant_velocity();
        dist = VelocityDistribution::gaussian(v_res + *sim.mean_offset_spreads * beam.velocity_spread(),
                                              beam.velocity_spread());
    }
    return {laser, beam, dist, sim.seed_field_ratio * laser.field()};
}

SimulationOutput cmd_simulate(const SimulationConfig& sim) {
    const auto in = simulation_inputs(sim);
    auto run = self_consistent_run(sim.ensemble, in.laser, in.beam, in.dist, in.E_g_initial);
    const auto cmp = compare_with_landau(run, in.laser, in.beam, in.dist);
    const auto wave = resonant_radiation(in.laser, in.beam, sim.ensemble.resonance);
    const double t_end = run.times.back();

    Table summary;
    summary.columns = {"gamma0",          "density_cm3",         "spread_fraction",
                       "intensity_W_cm2", "n_particles",         "seed",
                       "mean_offset",     "dt",                  "steps",
                       "t_end",           "window_start",        "kg_dv_t_end",
                       "growth_rate_fit", "growth_rate_transfer", "growth_rate_se",
                       "growth_rate_landau", "ratio",            "sign_agrees",
                       "within_factor_two", "consistent_with_zero", "max_residual",
                       "truncated",       "diagnostic"};
    const double offset = (in.dist.mean() - wave.resonant_velocity()) / in.dist.spread();
    summary.rows.push_back({sim.base.gamma0,
                            sim.base.density_cm3,
                            sim.base.spread_fraction,
                            sim.base.intensity_W_cm2,
                            static_cast<double>(sim.ensemble.n_particles),
                            static_cast<double>(sim.ensemble.seed),
                            offset,
                            run.dt,
                            static_cast<double>(run.steps),
                            t_end,
                            run.window_start,
                            wave.k_g() * in.dist.spread() * t_end,
                            run.growth_rate_fit,
                            run.growth_rate_transfer,
                            run.growth_rate_se,
                            cmp.predicted,
                            cmp.ratio,
                            cmp.sign_agrees,
                            cmp.within_factor_two,
                            cmp.consistent_with_zero,
                            run.max_residual,
                            run.truncated,
                            run.diagnostic});

    Table series;
    series.columns = {"t", "field_energy_density", "kinetic_energy_density", "residual"};
    series.rows.reserve(run.times.size());
    for (std::size_t i = 0; i < run.times.size(); ++i)
        series.rows.push_back({run.times[i], run.field_energy_density[i],
                               run.kinetic_energy_density[i], run.residual[i]});
    return {std::move(summary), std::move(series), std::move(run), cmp};
}

std::string cmd_audit(const AuditConfig& audit) {
    validate(audit.base);
    const auto laser = audit.base.laser();
    const auto beam = audit.base.beam();
    std::string out;
    out += "consistency audit\n";
    out += "gamma0 grid:";
    for (std::size_t i = 0; i < audit.gamma_grid.size(); ++i)
        out += printf_string("%s %g", i ? "," : "", audit.gamma_grid[i]);
    out += "\n\n";

    out += "[gain exponent] fitted d ln(gain) / d ln(gamma0)\n";
    const auto rows = scaling_audit(laser, beam, audit.gamma_grid, audit.base.modes.resonance);
    double normalized = 0, exact_kappa = 0;
    for (const auto& r : rows) {
        out += printf_string("  %-36s %+.6f  (reference %+.0f)\n", r.label.c_str(), r.fitted_exponent,
                             r.reference_exponent);
        if (r.label == "normalized") normalized = r.fitted_exponent;
        if (r.label == "landau(kappa=exact,slope=paper)") exact_kappa = r.fitted_exponent;
    }
    const bool discrepant = std::abs(normalized - exact_kappa) > 0.5;
    out += printf_string("  closed formula %+.3f vs exact-kappa assembly %+.3f: %s\n\n", normalized,
                         exact_kappa, discrepant ? "DISCREPANT" : "consistent");

    out += "[critical intensity exponents] along unit normalized gain\n";
    const auto claims = scaling_claims_check(laser, beam, audit.gamma_grid);
    auto claim = [&](const char* label, double fitted, double expected) {
        const bool ok = std::abs(fitted - expected) <= 1e-3;
        out += printf_string("  %-36s %+.6f  (expected %+.0f) %s\n", label, fitted, expected,
                             ok ? "PASS" : "FAIL");
    };
    claim("I_C", claims.exponent_I_C_constrained, 3);
    claim("I_C tau_g", claims.exponent_energy_constrained, 1);
    claim("I (constraint)", claims.exponent_intensity_constrained, 3);
    claim("I_C at fixed intensity", claims.exponent_I_C_fixed_intensity, 6);
    out += "\n";

    out += "[band-gap boundary] delta_omega_g T at the critical intensity\n";
    const auto critical = critical_intensity(laser, beam);
    for (const auto* entry : {&critical.flux, &critical.paper_literal}) {
        const double density = entry->convention == IntensityConvention::flux
                                   ? entry->I_C / units::kCgs.c
                                   : entry->I_C;
        const double dE_L = std::sqrt(8.0 * units::kPi * density);
        const double product = suppression_product(laser, beam, dE_L);
        const double err = std::abs(product - 1.0);
        out += printf_string("  %-6s product %.12f  rel.err %.3e  %s\n",
                             to_string(entry->convention).c_str(), product, err,
                             err <= 1e-6 ? "PASS" : "FAIL");
    }
    out += "\n";

    auto energy_ratio = [&](const char* label, const CaseConfig& c) {
        const auto ci = critical_intensity(c.laser(), c.beam());
        out += printf_string("[energy ratio] %s: gamma0 %g, I %g W/cm^2, tau %g ps (quoted %.0e)\n",
                             label, c.gamma0, c.intensity_W_cm2, c.duration_ps, kQuotedEnergyRatio);
        for (const auto* entry : {&ci.flux, &ci.paper_literal}) {
            out += printf_string("  %-6s consistent %.6e divergent=%s  printed %.6e divergent=%s\n",
                                 to_string(entry->convention).c_str(), entry->max_energy_ratio,
                                 entry->diverges ? "true" : "false", entry->max_energy_ratio_printed,
                                 entry->diverges_printed ? "true" : "false");
        }
    };
    CaseConfig reference = audit.base;
    reference.wavelength_um = 1.0;
    reference.intensity_W_cm2 = 1e18;
    reference.duration_ps = 1.0;
    reference.gamma0 = 100.0;
    energy_ratio("reference case", reference);
    energy_ratio("configured case", audit.base);

    if (laser.I18() > 1.0) out += std::string("\nwarning: ") + kHighIntensityWarning + "\n";
    return out;
}

}  // namespace laserfel::cli
