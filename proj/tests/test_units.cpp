#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "laserfel/beam_laser.hpp"
#include "laserfel/units.hpp"

using namespace laserfel;
using namespace laserfel::units;
using doctest::Approx;

TEST_CASE("peak field of a 1e18 W/cm^2 wave") {
    const double E0 = intensity_to_field(1e18);
    CHECK(E0 == Approx(9.15e7).epsilon(0.005));
    CHECK(field_to_intensity(E0) == Approx(1e18).epsilon(1e-14));
    CHECK(intensity_to_field(0.0) == 0.0);
    CHECK_THROWS_AS(intensity_to_field(-1.0), std::domain_error);
}

TEST_CASE("normalized amplitude at 1 um") {
    const auto laser = LaserParams::make(1e-4, 1e18, 1e-12);
    CHECK(laser.a0() == Approx(0.854).epsilon(0.002));
    CHECK(laser.I18() == Approx(1.0));
    CHECK(laser.omega0_tau() == Approx(1883.65).epsilon(1e-5));
}

TEST_CASE("wavenumbers and photon energies") {
    const auto w = wavelength_to_omega(1e-4);
    CHECK(w.k == Approx(2.0 * kPi * 1e4));
    CHECK(w.omega == Approx(1.8836515673e15).epsilon(1e-9));
    CHECK(photon_energy_keV(0.025 * kCmPerNanometer) == Approx(49.59).epsilon(1e-3));
    CHECK(photon_energy_keV(1e-4) * 1e3 == Approx(1.23984).epsilon(1e-5));
    CHECK_THROWS_AS(wavelength_to_omega(0.0), std::domain_error);
}

TEST_CASE("intensity conventions differ by exactly c") {
    const double E0 = 1e8;
    const double flux = field_to_cgs_intensity(E0, IntensityConvention::flux);
    const double density = field_to_cgs_intensity(E0, IntensityConvention::paper_literal);
    CHECK(flux / density == Approx(kCgs.c).epsilon(1e-15));
    CHECK(density == Approx(E0 * E0 / (8.0 * kPi)));
}

TEST_CASE("beam plasma frequency") {
    CHECK(beam_plasma_frequency(1e20) == Approx(5.641e14).epsilon(1e-3));
    CHECK(beam_plasma_frequency(0.0) == 0.0);
    CHECK_THROWS_AS(beam_plasma_frequency(-1.0), std::domain_error);
}
