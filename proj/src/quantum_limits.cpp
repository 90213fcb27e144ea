#include "laserfel/quantum_limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "laserfel/gain.hpp"

namespace laserfel {

using units::IntensityConvention;
using units::kCgs;
using units::kPi;

BeamFrame boost_to_beam_frame(const LaserParams& laser, const BeamParams& beam, BoostMode mode) {
    const double g = beam.gamma0();
    const double doppler = mode == BoostMode::paper ? 2.0 * g : g * (1.0 + beam.beta());
    const double omega_m = doppler * laser.omega0();
    return {omega_m, doppler * laser.field(), omega_m / kCgs.c, laser.duration() / g};
}

double diffraction_threshold(const LaserParams& laser) {
    const double k0 = laser.k0();
    return kCgs.m_e / (4.0 * kCgs.hbar * k0 * k0 * laser.duration());
}

bool diffraction_relevant(const LaserParams& laser, const BeamParams& beam) {
    return beam.gamma0() > diffraction_threshold(laser);
}

BandGap band_gap(double E_m, double dE_m, double omega_m) {
    if (!(omega_m > 0.0)) throw std::domain_error("band gap needs a positive frequency");
    if (!(E_m >= 0.0) || !(dE_m >= 0.0)) throw std::domain_error("band gap needs non-negative fields");
    const double v_osc = kCgs.e * E_m / (kCgs.m_e * omega_m);
    const double dv_osc = kCgs.e * dE_m / (kCgs.m_e * omega_m);
    return {kCgs.m_e / kCgs.hbar * v_osc * dv_osc, v_osc, dv_osc};
}

namespace {

CriticalIntensityEntry make_entry(IntensityConvention convention, double field, double prefactor,
                                  double lattice_density, double gamma0) {
    CriticalIntensityEntry e{};
    e.convention = convention;
    e.laser_intensity = units::field_to_cgs_intensity(field, convention);
    // Consistent form in the energy-density convention; the flux form carries c for both
    // the laser and the radiated intensity.
    const double energy_density = field * field / (8.0 * kPi);
    const double I_C_density = prefactor * lattice_density * lattice_density / energy_density;
    e.I_C = convention == IntensityConvention::flux ? kCgs.c * I_C_density : I_C_density;
    e.I_C_printed = prefactor * lattice_density / e.laser_intensity;
    const double g2 = gamma0 * gamma0;
    e.max_energy_ratio = e.I_C / (g2 * e.laser_intensity);
    e.max_energy_ratio_printed = e.I_C_printed / (g2 * e.laser_intensity);
    auto far = [](double ratio) { return std::abs(std::log10(ratio / kQuotedEnergyRatio)) > 1.0; };
    e.diverges = far(e.max_energy_ratio);
    e.diverges_printed = far(e.max_energy_ratio_printed);
    return e;
}

}  // namespace

CriticalIntensity critical_intensity(const LaserParams& laser, const BeamParams& beam) {
    if (!(laser.field() > 0.0))
        throw std::invalid_argument("critical intensity is undefined for zero laser intensity");
    const double g = beam.gamma0();
    const double g3 = g * g * g;
    const double tau = laser.duration();
    const double w0 = laser.omega0();
    const double two_pi_tau = 2.0 * kPi * tau;
    const double prefactor = g3 * g3 * kCgs.hbar * kCgs.hbar / (two_pi_tau * two_pi_tau);
    const double lattice_density = kCgs.m_e * w0 * w0 / (kCgs.e * kCgs.e);  // [1/cm^3]

    CriticalIntensity r{};
    r.tau_g = tau / (g * g);
    r.flux = make_entry(IntensityConvention::flux, laser.field(), prefactor, lattice_density, g);
    r.paper_literal =
        make_entry(IntensityConvention::paper_literal, laser.field(), prefactor, lattice_density, g);
    r.dE_L_boundary = std::sqrt(8.0 * kPi * r.paper_literal.I_C);
    return r;
}

double suppression_product(const LaserParams& laser, const BeamParams& beam, double dE_L) {
    const auto frame = boost_to_beam_frame(laser, beam, BoostMode::paper);
    const double dE_m = dE_L / (2.0 * beam.gamma0());
    return band_gap(frame.E_m, dE_m, frame.omega_m).delta_omega * frame.T;
}

QuantumLimits evaluate_limits(const LaserParams& laser, const BeamParams& beam, BoostMode mode) {
    QuantumLimits q{};
    q.frame = boost_to_beam_frame(laser, beam, mode);
    q.gamma_threshold = diffraction_threshold(laser);
    q.diffraction_relevant = beam.gamma0() > q.gamma_threshold;
    q.critical = critical_intensity(laser, beam);
    q.high_intensity_warning = laser.I18() > 1.0;
    return q;
}

ScalingClaims scaling_claims_check(const LaserParams& laser, const BeamParams& beam,
                                   std::span<const double> gamma_grid) {
    std::vector<double> g(gamma_grid.begin(), gamma_grid.end());
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (g.size() < 3) throw std::invalid_argument("scaling check needs at least 3 distinct gamma0");
    if (!(beam.density() > 0.0)) throw std::invalid_argument("scaling check needs a non-empty beam");

    const double zeta = beam.spread_fraction();
    std::vector<double> intensity, ic, energy, ic_fixed;
    for (double gamma0 : g) {
        const auto b = BeamParams::make(gamma0, beam.density(), zeta);
        const double I18 = gamma0 * gamma0 * gamma0 * zeta * zeta /
                           (1.4e-2 * b.n20() * laser.omega0_tau());
        const auto constrained =
            LaserParams::make(laser.wavelength(), I18 * units::kIntensity18, laser.duration());
        const auto c = critical_intensity(constrained, b);
        intensity.push_back(constrained.intensity_W_cm2());
        ic.push_back(c.flux.I_C);
        energy.push_back(c.flux.I_C * c.tau_g);
        ic_fixed.push_back(critical_intensity(laser, b).flux.I_C);
    }
    return {fit_power_law(g, ic), fit_power_law(g, energy), fit_power_law(g, ic_fixed),
            fit_power_law(g, intensity)};
}

}  // namespace laserfel
