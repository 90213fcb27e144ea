#include "laserfel/gain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace laserfel {

using units::kCgs;
using units::kPi;

namespace {

constexpr double kNormalizedCoefficient = 1.4e-2;
constexpr double kSeriesThreshold = 1e-4;

}  // namespace

namespace detail {

double loss_bracket_direct(double t, double alpha, double omega) {
    // long double keeps cos(x) - sin(x)/x accurate down to the series switch.
    const long double a = alpha;
    const long double tt = t;
    const long double w = omega;
    const long double x = a * tt;
    const long double s = std::sin(x);
    const long double c = std::cos(x);
    return static_cast<double>(-w * s / (a * a) + tt * c + w * tt * c / a);
}

double loss_bracket_series(double t, double alpha, double omega) {
    const double x = alpha * t;
    const double x2 = x * x;
    return t * std::cos(x) + omega * t * t * x * (-1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0);
}

}  // namespace detail

double loss_bracket(double t, double alpha, double omega) {
    if (std::abs(alpha * t) < kSeriesThreshold) return detail::loss_bracket_series(t, alpha, omega);
    return detail::loss_bracket_direct(t, alpha, omega);
}

double energy_loss_rate_at(double t, double alpha, const BeamParams& beam, double kappa_squared,
                           const RadiationWave& radiation) {
    if (!(t >= 0.0)) throw std::domain_error("time must be non-negative");
    const double g = beam.gamma0();
    const double eE = kCgs.e * radiation.field_amplitude();
    return g * g * g * kappa_squared * eE * eE / (2.0 * kCgs.m_e) *
           loss_bracket(t, alpha, radiation.beat_omega());
}

double energy_loss_rate(double t, const LaserParams& laser, const BeamParams& beam,
                        const RadiationWave& radiation, KappaMode kappa) {
    return energy_loss_rate_at(t, radiation.detuning(beam.v0()), beam,
                               kappa_sq(laser, beam, kappa), radiation);
}

GainResult landau_growth_rate(const LaserParams& laser, const BeamParams& beam,
                              const VelocityDistribution& dist, const GainModes& modes) {
    GainResult r;
    r.modes = modes;
    const auto wave = resonant_radiation(laser, beam, modes.resonance);
    r.slope = resonant_slope(dist, beam, wave, modes.slope);
    const double w_bpe = units::beam_plasma_frequency(beam.density());
    const double q = wave.q();
    r.growth_rate_exact = 0.5 * kPi * beam.gamma0() * kappa_sq(laser, beam, modes.kappa) *
                          (w_bpe * w_bpe) / (q * q) * r.slope.slope * wave.omega_g();
    r.gain_exact = r.growth_rate_exact * laser.duration();
    return r;
}

GainResult normalized_gain(const LaserParams& laser, const BeamParams& beam) {
    GainResult r;
    const double g = beam.gamma0();
    const double z = beam.spread_fraction();
    r.threshold_product = beam.n20() * laser.I18() / (z * z) * laser.omega0_tau();
    r.gain_paper = kNormalizedCoefficient * r.threshold_product / (g * g * g);
    r.growth_rate_paper = r.gain_paper / laser.duration();
    return r;
}

GainResult evaluate_gain(const LaserParams& laser, const BeamParams& beam,
                         const VelocityDistribution& dist, const GainModes& modes) {
    GainResult r = landau_growth_rate(laser, beam, dist, modes);
    const GainResult p = normalized_gain(laser, beam);
    r.growth_rate_paper = p.growth_rate_paper;
    r.gain_paper = p.gain_paper;
    r.threshold_product = p.threshold_product;
    const double gain = r.selected_gain();
    r.gain_factor = std::exp(gain);
    r.feasible = gain > 1.0;
    return r;
}

double fit_power_law(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("power-law fit: size mismatch");
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::domain_error("power-law fit needs positive data");
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(x[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y[i]) - my);
    }
    if (!(sxx > 0.0)) throw std::invalid_argument("power-law fit needs distinct abscissae");
    return sxy / sxx;
}

std::vector<ScalingAuditRow> scaling_audit(const LaserParams& laser, const BeamParams& beam,
                                           std::span<const double> gamma_grid,
                                           ResonanceMode resonance) {
    std::vector<double> distinct(gamma_grid.begin(), gamma_grid.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3)
        throw std::invalid_argument("scaling audit needs at least 3 distinct gamma0 values");

    struct Combo {
        const char* label;
        KappaMode kappa;
        SlopeMode slope;
    };
    const Combo combos[] = {
        {"landau(kappa=paper,slope=paper)", KappaMode::paper, SlopeMode::paper},
        {"landau(kappa=exact,slope=paper)", KappaMode::exact, SlopeMode::paper},
        {"landau(kappa=paper,slope=gaussian)", KappaMode::paper, SlopeMode::gaussian},
        {"landau(kappa=exact,slope=gaussian)", KappaMode::exact, SlopeMode::gaussian},
    };

    std::vector<ScalingAuditRow> rows;
    std::vector<double> gains(distinct.size());
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        const auto b = BeamParams::make(distinct[i], beam.density(), beam.spread_fraction());
        gains[i] = normalized_gain(laser, b).gain_paper;
    }
    rows.push_back({"normalized", fit_power_law(distinct, gains), -3.0});

    for (const auto& combo : combos) {
        for (std::size_t i = 0; i < distinct.size(); ++i) {
            const auto b = BeamParams::make(distinct[i], beam.density(), beam.spread_fraction());
            const GainModes modes{combo.kappa, combo.slope, resonance, GainMethod::landau};
            // Gaussian-slope gains may carry either sign; the exponent is fitted on |gain|.
            gains[i] = std::abs(landau_growth_rate(laser, b, VelocityDistribution::from_beam(b),
                                                   modes).gain_exact);
        }
        rows.push_back({combo.label, fit_power_law(distinct, gains), -3.0});
    }
    return rows;
}

}  // namespace laserfel
