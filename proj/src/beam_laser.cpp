#include "laserfel/beam_laser.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <random>
#include <stdexcept>

#include "laserfel/random.hpp"

namespace laserfel {

using units::kCgs;
using units::kPi;

double standard_normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile requires 0 < p < 1");
    return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
}

LaserParams LaserParams::make(double wavelength_cm, double intensity_W_cm2, double duration_s) {
    if (!(duration_s > 0.0)) throw std::domain_error("laser duration must be positive");
    const auto wave = units::wavelength_to_omega(wavelength_cm);
    LaserParams p;
    p.wavelength_ = wavelength_cm;
    p.intensity_ = intensity_W_cm2;
    p.duration_ = duration_s;
    p.field_ = units::intensity_to_field(intensity_W_cm2);
    p.omega0_ = wave.omega;
    p.k0_ = wave.k;
    p.a0_ = kCgs.e * p.field_ / (kCgs.m_e * kCgs.c * kCgs.c * p.k0_);
    return p;
}

BeamParams BeamParams::make(double gamma0, double density_cm3, double spread_fraction) {
    if (!(gamma0 > 1.0)) throw std::domain_error("gamma0 must exceed 1");
    if (!(density_cm3 >= 0.0)) throw std::domain_error("beam density must be non-negative");
    if (!(spread_fraction > 0.0)) throw std::domain_error("energy spread must be positive");
    BeamParams b;
    b.gamma0_ = gamma0;
    b.density_ = density_cm3;
    b.spread_ = spread_fraction;
    const double inv_g2 = 1.0 / (gamma0 * gamma0);
    b.beta_ = std::sqrt(1.0 - inv_g2);
    b.one_minus_beta_ = inv_g2 / (1.0 + b.beta_);
    return b;
}

double BeamParams::velocity_spread() const {
    return kCgs.c * spread_ / (gamma0_ * gamma0_);
}

VelocityDistribution VelocityDistribution::gaussian(double mean, double spread) {
    if (!(spread > 0.0)) throw std::domain_error("distribution spread must be positive");
    if (!(std::abs(mean) < kCgs.c)) throw std::domain_error("distribution mean must be below c");
    VelocityDistribution d;
    d.mean_ = mean;
    d.spread_ = spread;
    return d;
}

VelocityDistribution VelocityDistribution::from_beam(const BeamParams& beam) {
    return gaussian(beam.v0(), beam.velocity_spread());
}

double VelocityDistribution::pdf(double v) const {
    const double x = (v - mean_) / spread_;
    return std::exp(-0.5 * x * x) / (std::sqrt(2.0 * kPi) * spread_);
}

double VelocityDistribution::slope(double v) const {
    const double x = (v - mean_) / spread_;
    return -x / spread_ * pdf(v);
}

double VelocityDistribution::quantile(double p) const {
    return mean_ + spread_ * standard_normal_quantile(p);
}

double VelocityDistribution::max_abs_slope() const {
    return 1.0 / (std::sqrt(2.0 * kPi * std::exp(1.0)) * spread_ * spread_);
}

double distribution_pdf(const VelocityDistribution& dist, double v) { return dist.pdf(v); }

double distribution_slope(const VelocityDistribution& dist, double v) { return dist.slope(v); }

std::vector<double> distribution_sample(const VelocityDistribution& dist, std::uint64_t seed,
                                        std::size_t count) {
    if (count == 0) throw std::invalid_argument("sample count must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<double> out(count);
    for (auto& v : out) v = dist.quantile(uniform_open(rng));
    return out;
}

double slope_paper(const BeamParams& beam) {
    const double g2 = beam.gamma0() * beam.gamma0();
    const double z = beam.spread_fraction();
    return g2 * g2 / (z * z * kCgs.c * kCgs.c);
}

RadiationWave::RadiationWave(double k0, double k_g, double field_amplitude)
    : k0_(k0), k_g_(k_g), field_(field_amplitude) {
    if (!(k0 > 0.0) || !(k_g > k0)) throw std::domain_error("radiation requires k_g > k0 > 0");
    if (!(field_amplitude >= 0.0)) throw std::domain_error("field amplitude must be non-negative");
}

double RadiationWave::wavelength() const { return 2.0 * kPi / k_g_; }

double RadiationWave::photon_energy_keV() const { return units::photon_energy_keV(wavelength()); }

RadiationWave RadiationWave::with_field(double field_amplitude) const {
    return RadiationWave(k0_, k_g_, field_amplitude);
}

QuiverVelocity quiver_velocity(const LaserParams& laser, const BeamParams& beam) {
    const double V_x = kCgs.e * laser.field() / (kCgs.m_e * kCgs.c * laser.k0());
    return {V_x, 2.0 * V_x / beam.gamma0()};
}

double coupling_kappa(const LaserParams& laser, const BeamParams& beam) {
    const double g2 = beam.gamma0() * beam.gamma0();
    const double b2 = beam.beta() * beam.beta();
    return laser.a0() / (g2 * (g2 * b2 + 1.0));
}

double kappa_sq_paper(const LaserParams& laser, const BeamParams& beam) {
    const double g2 = beam.gamma0() * beam.gamma0();
    return laser.I18() / (2.5 * g2 * g2);
}

double kappa_sq(const LaserParams& laser, const BeamParams& beam, KappaMode mode) {
    if (mode == KappaMode::paper) return kappa_sq_paper(laser, beam);
    const double k = coupling_kappa(laser, beam);
    return k * k;
}

RadiationWave resonant_radiation(const LaserParams& laser, const BeamParams& beam,
                                 ResonanceMode mode, double field_amplitude) {
    const double k0 = laser.k0();
    const double g2 = beam.gamma0() * beam.gamma0();
    const double k_g = mode == ResonanceMode::exact ? 2.0 * k0 / beam.one_minus_beta()
                                                    : 4.0 * g2 * k0;
    return RadiationWave(k0, k_g, field_amplitude);
}

SlopeEvaluation resonant_slope(const VelocityDistribution& dist, const BeamParams& beam,
                               const RadiationWave& wave, SlopeMode mode) {
    if (mode == SlopeMode::paper) return {slope_paper(beam), 0.0, false};
    const double v_res = wave.resonant_velocity();
    if (std::abs(v_res - dist.mean()) > 8.0 * dist.spread()) {
        const double v = dist.mean() - dist.spread();
        return {dist.slope(v), v, false};
    }
    return {dist.slope(v_res), v_res, true};
}

}  // namespace laserfel
