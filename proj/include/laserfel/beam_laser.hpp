#pragma once

#include <cstdint>
#include <vector>

#include "laserfel/units.hpp"

namespace laserfel {

/// Counter-propagating undulator laser, E = E0 cos(k0 z + c k0 t) x.
class LaserParams {
public:
    /// wavelength [cm], intensity [W/cm^2] (flux convention), duration [s].
    static LaserParams make(double wavelength_cm, double intensity_W_cm2, double duration_s);

    double wavelength() const { return wavelength_; }
    double intensity_W_cm2() const { return intensity_; }
    double duration() const { return duration_; }
    double field() const { return field_; }
    double omega0() const { return omega0_; }
    double k0() const { return k0_; }
    /// Normalized amplitude e E0 / (m c omega0), identical to V_x / c.
    double a0() const { return a0_; }
    double I18() const { return intensity_ / units::kIntensity18; }
    double omega0_tau() const { return omega0_ * duration_; }

private:
    LaserParams() = default;

    double wavelength_ = 0;
    double intensity_ = 0;
    double duration_ = 0;
    double field_ = 0;
    double omega0_ = 0;
    double k0_ = 0;
    double a0_ = 0;
};

/// Relativistic electron beam moving along +z.
class BeamParams {
public:
    /// gamma0 > 1, density [cm^-3] >= 0, spread_fraction = dE/E > 0.
    static BeamParams make(double gamma0, double density_cm3, double spread_fraction);

    double gamma0() const { return gamma0_; }
    double density() const { return density_; }
    double spread_fraction() const { return spread_; }
    double beta() const { return beta_; }
    /// 1 - v0/c, evaluated without cancellation.
    double one_minus_beta() const { return one_minus_beta_; }
    double v0() const { return beta_ * units::kCgs.c; }
    /// Velocity spread c zeta / gamma0^2 [cm/s].
    double velocity_spread() const;
    double n20() const { return density_ / units::kDensity20; }

private:
    BeamParams() = default;

    double gamma0_ = 0;
    double density_ = 0;
    double spread_ = 0;
    double beta_ = 0;
    double one_minus_beta_ = 0;
};

/// One-dimensional longitudinal velocity distribution f_e(v_z), unit normalized.
class VelocityDistribution {
public:
    enum class Shape { gaussian };

    /// Gaussian of the given mean [cm/s] and standard deviation [cm/s].
    static VelocityDistribution gaussian(double mean, double spread);
    /// Gaussian centred on the beam velocity with the beam's spread.
    static VelocityDistribution from_beam(const BeamParams& beam);

    Shape shape() const { return shape_; }
    double mean() const { return mean_; }
    double spread() const { return spread_; }

    double pdf(double v) const;
    double slope(double v) const;
    /// Velocity at quantile p in (0, 1).
    double quantile(double p) const;
    /// Largest |df/dv|, reached at mean -/+ spread.
    double max_abs_slope() const;

private:
    VelocityDistribution() = default;

    Shape shape_ = Shape::gaussian;
    double mean_ = 0;
    double spread_ = 0;
};

double distribution_pdf(const VelocityDistribution& dist, double v);
double distribution_slope(const VelocityDistribution& dist, double v);
/// `count` independent draws, reproducible for a given seed.
std::vector<double> distribution_sample(const VelocityDistribution& dist, std::uint64_t seed,
                                        std::size_t count);
/// Crude slope estimate (1/c^2)(gamma0^4 / zeta^2).
double slope_paper(const BeamParams& beam);

/// Amplified co-moving wave and the beat-wave kinematics it implies.
class RadiationWave {
public:
    RadiationWave(double k0, double k_g, double field_amplitude = 0.0);

    double k0() const { return k0_; }
    double k_g() const { return k_g_; }
    double omega_g() const { return units::kCgs.c * k_g_; }
    /// Lab-frame amplitude of the amplified wave [statvolt/cm].
    double field_amplitude() const { return field_; }
    double wavelength() const;
    double photon_energy_keV() const;
    /// q = k0 + k_g.
    double q() const { return k0_ + k_g_; }
    /// Beat frequency omega = c (k_g - k0).
    double beat_omega() const { return units::kCgs.c * (k_g_ - k0_); }
    /// Phase velocity omega / q of the ponderomotive beat.
    double resonant_velocity() const { return beat_omega() / q(); }
    /// alpha = q v - omega.
    double detuning(double v) const { return q() * v - beat_omega(); }

    RadiationWave with_field(double field_amplitude) const;

private:
    double k0_;
    double k_g_;
    double field_;
};

enum class ResonanceMode { exact, approx };
enum class KappaMode { exact, paper };
enum class SlopeMode { gaussian, paper };

struct QuiverVelocity {
    double V_x;        // e E0 / (m c k0) [cm/s]
    double amplitude;  // 2 V_x / gamma0 [cm/s]
};

QuiverVelocity quiver_velocity(const LaserParams& laser, const BeamParams& beam);

/// kappa = V_x / c / (gamma0^2 (gamma0^2 beta^2 + 1)).
double coupling_kappa(const LaserParams& laser, const BeamParams& beam);
/// Crude estimate kappa^2 = I18 / (2.5 gamma0^4).
double kappa_sq_paper(const LaserParams& laser, const BeamParams& beam);
double kappa_sq(const LaserParams& laser, const BeamParams& beam, KappaMode mode);

/// Resonant wave: exact k_g = 2 k0 / (1 - beta), approx k_g = 4 gamma0^2 k0.
RadiationWave resonant_radiation(const LaserParams& laser, const BeamParams& beam,
                                 ResonanceMode mode = ResonanceMode::approx,
                                 double field_amplitude = 0.0);

struct SlopeEvaluation {
    double slope;             // df/dv [s^2/cm^2]
    double velocity;          // evaluation point (0 for the crude estimate)
    bool used_resonance;      // false when the far-tail fallback was taken
};

/// Distribution slope entering the growth rate. In gaussian mode the slope is
/// taken at omega/q, unless that lies beyond 8 spreads from the mean, in which
/// case the maximum positive slope (mean - spread) is used.
SlopeEvaluation resonant_slope(const VelocityDistribution& dist, const BeamParams& beam,
                               const RadiationWave& wave, SlopeMode mode);

}  // namespace laserfel
