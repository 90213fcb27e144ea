#pragma once

#include <span>
#include <string>

#include "laserfel/beam_laser.hpp"

namespace laserfel {

/// Lorentz boost into the beam rest frame:
///  paper: omega_m = 2 gamma0 omega0, E_m = 2 gamma0 E0
///  exact: omega_m = gamma0 (1 + beta) omega0, E_m = gamma0 (1 + beta) E0
enum class BoostMode { paper, exact };

struct BeamFrame {
    double omega_m;  // [rad/s]
    double E_m;      // [statvolt/cm]
    double k_m;      // omega_m / c [1/cm]
    double T;        // tau / gamma0 [s]
};

BeamFrame boost_to_beam_frame(const LaserParams& laser, const BeamParams& beam,
                              BoostMode mode = BoostMode::paper);

/// Smallest gamma0 for which hbar k_m^2 / m_e exceeds 1/T, i.e. m_e / (4 hbar k0^2 tau).
double diffraction_threshold(const LaserParams& laser);
bool diffraction_relevant(const LaserParams& laser, const BeamParams& beam);

struct BandGap {
    double delta_omega;  // (m_e / hbar) v_osc dv_osc [rad/s]
    double v_osc;        // e E_m / (m_e omega_m) [cm/s]
    double dv_osc;       // e dE_m / (m_e omega_m) [cm/s]
};

BandGap band_gap(double E_m, double dE_m, double omega_m);

/// True when the gap is large enough to block the transition, delta_omega * T > 1.
inline bool band_gap_suppresses(const BandGap& gap, double T) { return gap.delta_omega * T > 1.0; }

/// Reference value for the maximum radiated energy fraction in the
/// gamma0 = 100, I18 = 1, tau = 1 ps example.
inline constexpr double kQuotedEnergyRatio = 1e-9;

/// Critical radiated intensity in one intensity convention.
struct CriticalIntensityEntry {
    units::IntensityConvention convention;
    double laser_intensity;   // I in this convention (CGS)
    double I_C;               // boundary intensity, consistent with the band-gap condition (CGS)
    double I_C_printed;       // same expression with m w0^2 / e^2 to the first power (CGS)
    double max_energy_ratio;          // I_C tau_g / (I tau)
    double max_energy_ratio_printed;  // I_C_printed tau_g / (I tau)
    bool diverges;                    // consistent ratio more than 10x away from the quoted 1e-9
    bool diverges_printed;
};

struct CriticalIntensity {
    double tau_g;          // tau / gamma0^2 [s]
    double dE_L_boundary;  // lab-frame radiated field at the boundary [statvolt/cm]
    CriticalIntensityEntry flux;
    CriticalIntensityEntry paper_literal;

    const CriticalIntensityEntry& entry(units::IntensityConvention c) const {
        return c == units::IntensityConvention::flux ? flux : paper_literal;
    }
};

/// I_C = (gamma0^6 hbar^2 / ((2 pi)^2 tau^2)) (m w0^2 / e^2)^2 / I in both intensity
/// conventions; throws std::invalid_argument when I = 0.
CriticalIntensity critical_intensity(const LaserParams& laser, const BeamParams& beam);

/// delta_omega_g * T for a radiated lab field dE_L, using dE_m = dE_L / (2 gamma0) and the
/// paper-mode boost. Equals 1 at the critical intensity.
double suppression_product(const LaserParams& laser, const BeamParams& beam, double dE_L);

struct QuantumLimits {
    BeamFrame frame;
    double gamma_threshold;
    bool diffraction_relevant;
    CriticalIntensity critical;
    bool high_intensity_warning;  // I18 > 1
};

QuantumLimits evaluate_limits(const LaserParams& laser, const BeamParams& beam,
                              BoostMode mode = BoostMode::paper);

inline constexpr const char* kHighIntensityWarning =
    "I18 > 1: non-relativistic Schrodinger treatment of the quiver motion is not valid; "
    "quantum-limit estimates need modification";

struct ScalingClaims {
    double exponent_I_C_constrained;        // expected 3
    double exponent_energy_constrained;     // I_C tau_g, expected 1
    double exponent_I_C_fixed_intensity;    // expected 6
    double exponent_intensity_constrained;  // I along the unit-gain constraint, expected 3
};

/// Holds the normalized gain at exactly 1 by choosing I at every gamma0
/// (I18 = gamma0^3 zeta^2 / (1.4e-2 n20 w0 tau)) and fits the resulting exponents.
ScalingClaims scaling_claims_check(const LaserParams& laser, const BeamParams& beam,
                                   std::span<const double> gamma_grid);

}  // namespace laserfel
