#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "laserfel/quantum_limits.hpp"

using namespace laserfel;
using units::IntensityConvention;
using units::kCgs;
using units::kPi;
using doctest::Approx;

namespace {
const auto kLaser = LaserParams::make(1e-4, 1e18, 1e-12);
}

TEST_CASE("diffraction threshold at 1 um and 1 ps") {
    const double g = diffraction_threshold(kLaser);
    CHECK(g >= 53.0);
    CHECK(g <= 56.0);
    CHECK(g == Approx(54.7).epsilon(1e-3));
    CHECK_FALSE(diffraction_relevant(kLaser, BeamParams::make(50.0, 1e20, 1e-3)));
    CHECK(diffraction_relevant(kLaser, BeamParams::make(60.0, 1e20, 1e-3)));
    const auto longer = LaserParams::make(1e-4, 1e18, 2e-12);
    CHECK(diffraction_threshold(longer) == Approx(g / 2.0));
}

TEST_CASE("beam-frame quantities") {
    const auto b = BeamParams::make(100.0, 1e20, 1e-3);
    const auto paper = boost_to_beam_frame(kLaser, b, BoostMode::paper);
    const auto exact = boost_to_beam_frame(kLaser, b, BoostMode::exact);
    CHECK(paper.omega_m == Approx(200.0 * kLaser.omega0()));
    CHECK(paper.E_m == Approx(200.0 * kLaser.field()));
    CHECK(paper.T == Approx(1e-14));
    CHECK(exact.omega_m / paper.omega_m == Approx((1.0 + b.beta()) / 2.0));
}

TEST_CASE("band gap") {
    const auto gap = band_gap(2e9, 3e3, 4e17);
    CHECK(gap.v_osc == Approx(kCgs.e * 2e9 / (kCgs.m_e * 4e17)));
    CHECK(gap.delta_omega == Approx(kCgs.m_e / kCgs.hbar * gap.v_osc * gap.dv_osc));
    CHECK(band_gap_suppresses(gap, 2.0 / gap.delta_omega));
    CHECK_FALSE(band_gap_suppresses(gap, 0.5 / gap.delta_omega));
}

TEST_CASE("critical intensity sits on the band-gap boundary") {
    for (double g : {10.0, 100.0, 1000.0}) {
        const auto b = BeamParams::make(g, 1e20, 1e-3);
        const auto c = critical_intensity(kLaser, b);
        CHECK(suppression_product(kLaser, b, c.dE_L_boundary) == Approx(1.0).epsilon(1e-6));
        CHECK(c.flux.I_C / c.paper_literal.I_C == Approx(kCgs.c).epsilon(1e-14));
        CHECK(c.flux.max_energy_ratio == Approx(c.paper_literal.max_energy_ratio).epsilon(1e-14));
        CHECK(c.tau_g == Approx(1e-12 / (g * g)));
    }
}

TEST_CASE("critical intensity power laws at fixed laser") {
    const auto c1 = critical_intensity(kLaser, BeamParams::make(10.0, 1e20, 1e-3));
    const auto c2 = critical_intensity(kLaser, BeamParams::make(20.0, 1e20, 1e-3));
    CHECK(c2.flux.I_C / c1.flux.I_C == Approx(64.0));
    const auto brighter = LaserParams::make(1e-4, 4e18, 1e-12);
    const auto c3 = critical_intensity(brighter, BeamParams::make(10.0, 1e20, 1e-3));
    CHECK(c3.flux.I_C / c1.flux.I_C == Approx(0.25));
    const auto longer = LaserParams::make(1e-4, 1e18, 2e-12);
    const auto c4 = critical_intensity(longer, BeamParams::make(10.0, 1e20, 1e-3));
    CHECK(c4.flux.I_C / c1.flux.I_C == Approx(0.25));
}

TEST_CASE("reference energy ratio in both conventions") {
    const auto c = critical_intensity(kLaser, BeamParams::make(100.0, 1e20, 1e-3));
    for (auto conv : {IntensityConvention::flux, IntensityConvention::paper_literal}) {
        const auto& e = c.entry(conv);
        CHECK(e.max_energy_ratio == Approx(4.97e-9).epsilon(2e-3));
        CHECK_FALSE(e.diverges);
        CHECK(e.diverges_printed);
        CHECK(e.max_energy_ratio_printed < 1e-20);
    }
}

TEST_CASE("critical intensity needs a laser") {
    const auto dark = LaserParams::make(1e-4, 0.0, 1e-12);
    CHECK_THROWS_AS(critical_intensity(dark, BeamParams::make(10.0, 1e20, 1e-3)),
                    std::invalid_argument);
}

TEST_CASE("scaling along unit gain") {
    const auto b = BeamParams::make(10.0, 1e19, 0.01);
    const auto s = scaling_claims_check(kLaser, b, std::vector<double>{10.0, 30.0, 100.0, 300.0});
    CHECK(s.exponent_I_C_constrained == Approx(3.0).epsilon(1e-6));
    CHECK(s.exponent_energy_constrained == Approx(1.0).epsilon(1e-6));
    CHECK(s.exponent_I_C_fixed_intensity == Approx(6.0).epsilon(1e-6));
    CHECK(s.exponent_intensity_constrained == Approx(3.0).epsilon(1e-6));
    CHECK_THROWS(scaling_claims_check(kLaser, b, std::vector<double>{10.0, 30.0}));
    CHECK_THROWS(scaling_claims_check(kLaser, BeamParams::make(10.0, 0.0, 0.01),
                                      std::vector<double>{10.0, 30.0, 100.0}));
}

TEST_CASE("high intensity validity warning") {
    const auto b = BeamParams::make(100.0, 1e20, 1e-3);
    CHECK_FALSE(evaluate_limits(kLaser, b).high_intensity_warning);
    CHECK(evaluate_limits(LaserParams::make(1e-4, 2e18, 1e-12), b).high_intensity_warning);
}
