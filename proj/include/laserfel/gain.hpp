#pragma once

#include <span>
#include <string>
#include <vector>

#include "laserfel/beam_laser.hpp"

namespace laserfel {

/// Which evaluation feeds gain_factor and the feasibility flag.
enum class GainMethod {
    normalized,  // closed engineering formula 1.4e-2 n20 I18 w0 tau / (gamma0^3 zeta^2)
    landau,      // Landau growth rate assembled from its components
};

struct GainModes {
    KappaMode kappa = KappaMode::paper;
    SlopeMode slope = SlopeMode::paper;
    ResonanceMode resonance = ResonanceMode::approx;
    GainMethod method = GainMethod::normalized;
};

struct GainResult {
    double growth_rate_exact = 0;  // Landau growth rate [1/s]
    double gain_exact = 0;         // growth_rate_exact * tau
    double growth_rate_paper = 0;  // normalized formula [1/s]
    double gain_paper = 0;
    double threshold_product = 0;  // (n20 I18 / zeta^2) w0 tau
    double gain_factor = 1;        // exp(gain) of the selected method
    bool feasible = false;         // gain > 1 for the selected method
    GainModes modes;
    SlopeEvaluation slope{};

    double selected_gain() const {
        return modes.method == GainMethod::normalized ? gain_paper : gain_exact;
    }
};

/// Bracket of the phase-averaged energy exchange
///   -w sin(a t)/a^2 + t cos(a t) + w t cos(a t)/a,
/// switching to a Taylor series when |a t| < 1e-4.
double loss_bracket(double t, double alpha, double omega);

namespace detail {
double loss_bracket_direct(double t, double alpha, double omega);
double loss_bracket_series(double t, double alpha, double omega);
}  // namespace detail

/// Phase-averaged electron energy gain rate per electron,
///   (m/2) gamma0^3 d<dv^2>/dt = gamma0^3 kappa^2 (e^2 E_g^2 / 2m) * bracket,
/// at the beam velocity v0 [erg/s]. Positive means the electrons gain energy.
double energy_loss_rate(double t, const LaserParams& laser, const BeamParams& beam,
                        const RadiationWave& radiation, KappaMode kappa = KappaMode::exact);

/// Same, for an arbitrary detuning alpha.
double energy_loss_rate_at(double t, double alpha, const BeamParams& beam, double kappa_squared,
                           const RadiationWave& radiation);

/// Landau growth rate (pi/2) gamma0 (kappa^2 w_bpe^2 / q^2) (df/dv) w_g.
/// Only the *_exact fields (and slope) are filled.
GainResult landau_growth_rate(const LaserParams& laser, const BeamParams& beam,
                              const VelocityDistribution& dist, const GainModes& modes);

/// Closed engineering formula. Only the *_paper and threshold fields are filled.
GainResult normalized_gain(const LaserParams& laser, const BeamParams& beam);

/// Both evaluations plus gain_factor/feasible for modes.method.
GainResult evaluate_gain(const LaserParams& laser, const BeamParams& beam,
                         const VelocityDistribution& dist, const GainModes& modes);

struct ScalingAuditRow {
    std::string label;
    double fitted_exponent;
    double reference_exponent;
};

/// Least-squares slope of log(y) against log(x).
double fit_power_law(std::span<const double> x, std::span<const double> y);

/// Fits log(gain) against log(gamma0) for the normalized formula and for each
/// kappa/slope combination of the Landau formula, holding everything else fixed.
std::vector<ScalingAuditRow> scaling_audit(const LaserParams& laser, const BeamParams& beam,
                                           std::span<const double> gamma_grid,
                                           ResonanceMode resonance = ResonanceMode::approx);

}  // namespace laserfel
