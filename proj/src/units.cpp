#include "laserfel/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace laserfel::units {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

}  // namespace

double intensity_to_field(double intensity_W_cm2) {
    require(intensity_W_cm2 >= 0.0, "intensity must be non-negative");
    const double flux = intensity_W_cm2 * kErgPerSecPerWatt;
    return std::sqrt(8.0 * kPi * flux / kCgs.c);
}

double field_to_intensity(double field_statvolt_cm) {
    require(field_statvolt_cm >= 0.0, "field amplitude must be non-negative");
    return kCgs.c * field_statvolt_cm * field_statvolt_cm / (8.0 * kPi) / kErgPerSecPerWatt;
}

double field_to_cgs_intensity(double field_statvolt_cm, IntensityConvention convention) {
    require(field_statvolt_cm >= 0.0, "field amplitude must be non-negative");
    const double energy_density = field_statvolt_cm * field_statvolt_cm / (8.0 * kPi);
    return convention == IntensityConvention::flux ? kCgs.c * energy_density : energy_density;
}

WaveNumbers wavelength_to_omega(double wavelength_cm) {
    require(wavelength_cm > 0.0, "wavelength must be positive");
    const double k = 2.0 * kPi / wavelength_cm;
    return {kCgs.c * k, k};
}

double beam_plasma_frequency(double density_cm3) {
    require(density_cm3 >= 0.0, "beam density must be non-negative");
    return std::sqrt(4.0 * kPi * density_cm3 * kCgs.e * kCgs.e / kCgs.m_e);
}

double photon_energy_keV(double wavelength_cm) {
    require(wavelength_cm > 0.0, "wavelength must be positive");
    const double h = 2.0 * kPi * kCgs.hbar;
    return h * kCgs.c / wavelength_cm / kErgPerKeV;
}

}  // namespace laserfel::units
