#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "laserfel/beam_laser.hpp"

using namespace laserfel;
using units::kCgs;
using units::kPi;
using doctest::Approx;

namespace {
const auto kLaser = LaserParams::make(1e-4, 1e18, 1e-12);
}

TEST_CASE("beam kinematics at large gamma keep 1 - beta accurate") {
    const auto b = BeamParams::make(1e4, 1e20, 1e-3);
    CHECK(b.one_minus_beta() == Approx(0.5e-8).epsilon(1e-7));
    CHECK(b.velocity_spread() == Approx(kCgs.c * 1e-3 / 1e8));
    CHECK(b.n20() == Approx(1.0));
    CHECK_THROWS(BeamParams::make(1.0, 1e20, 1e-3));
    CHECK_THROWS(BeamParams::make(10.0, 1e20, 0.0));
}

TEST_CASE("gaussian density, slope and extremes") {
    const auto d = VelocityDistribution::gaussian(1e10, 1e6);
    double integral = 0.0;
    const double h = 1e3;
    for (double v = 1e10 - 1e7; v <= 1e10 + 1e7; v += h) integral += d.pdf(v) * h;
    CHECK(integral == Approx(1.0).epsilon(1e-6));

    const double v = 1e10 + 7e5;
    const double fd = (d.pdf(v + 10.0) - d.pdf(v - 10.0)) / 20.0;
    CHECK(d.slope(v) == Approx(fd).epsilon(1e-6));
    CHECK(distribution_slope(d, v) == d.slope(v));

    // Peak density over peak slope magnitude is sigma sqrt(e).
    CHECK(d.pdf(d.mean()) / d.max_abs_slope() == Approx(1e6 * std::sqrt(std::exp(1.0))));
    CHECK(d.max_abs_slope() == Approx(1.0 / (1e12 * std::sqrt(2.0 * kPi * std::exp(1.0)))));
    CHECK(d.slope(d.mean() - 1e6) == Approx(d.max_abs_slope()));
    CHECK(d.quantile(0.5) == Approx(1e10));
}

TEST_CASE("sampling passes a chi-square test on equiprobable bins") {
    const auto d = VelocityDistribution::gaussian(-3e9, 2e7);
    const std::size_t n = 1'000'000;
    const std::size_t bins = 50;
    const auto samples = distribution_sample(d, 7, n);
    std::vector<double> edges;
    for (std::size_t i = 1; i < bins; ++i) edges.push_back(d.quantile(double(i) / bins));
    std::vector<double> counts(bins, 0.0);
    for (double s : samples)
        counts[std::upper_bound(edges.begin(), edges.end(), s) - edges.begin()] += 1.0;
    const double expected = double(n) / bins;
    double chi2 = 0.0;
    for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
    const double p = boost::math::cdf(
        boost::math::complement(boost::math::chi_squared(bins - 1.0), chi2));
    CHECK(p > 1e-3);
}

TEST_CASE("sampling is reproducible per seed") {
    const auto d = VelocityDistribution::gaussian(0.0, 1.0);
    CHECK(distribution_sample(d, 3, 100) == distribution_sample(d, 3, 100));
    CHECK(distribution_sample(d, 3, 100) != distribution_sample(d, 4, 100));
}

TEST_CASE("quiver velocity and coupling") {
    const auto b = BeamParams::make(10.0, 1e19, 0.01);
    const auto q = quiver_velocity(kLaser, b);
    CHECK(q.V_x == Approx(kLaser.a0() * kCgs.c));
    CHECK(q.amplitude == Approx(2.0 * q.V_x / 10.0));
    CHECK(coupling_kappa(kLaser, b) == Approx(8.54e-5).epsilon(2e-3));
    CHECK(kappa_sq_paper(kLaser, b) == Approx(1.0 / (2.5 * 1e4)));
    CHECK(kappa_sq(kLaser, b, KappaMode::exact) == Approx(std::pow(coupling_kappa(kLaser, b), 2)));
}

TEST_CASE("resonant wavelength ladder") {
    const auto b10 = BeamParams::make(10.0, 1e19, 0.01);
    const auto b100 = BeamParams::make(100.0, 1e20, 0.001);
    CHECK(resonant_radiation(kLaser, b10).wavelength() / units::kCmPerNanometer ==
          Approx(2.5).epsilon(0.01));
    CHECK(resonant_radiation(kLaser, b100).wavelength() / units::kCmPerNanometer ==
          Approx(0.025).epsilon(0.01));
    for (double g : {10.0, 30.0, 100.0, 1000.0}) {
        const auto b = BeamParams::make(g, 1e19, 0.01);
        const double exact = resonant_radiation(kLaser, b, ResonanceMode::exact).k_g();
        const double approx = resonant_radiation(kLaser, b, ResonanceMode::approx).k_g();
        CHECK(std::abs(exact - approx) / exact < 5e-3);
    }
}

TEST_CASE("beat wave moves at the resonant velocity") {
    const auto b = BeamParams::make(20.0, 1e19, 0.01);
    const auto w = resonant_radiation(kLaser, b, ResonanceMode::exact);
    CHECK(w.detuning(w.resonant_velocity()) == Approx(0.0).epsilon(1e-12));
    const double beta = b.beta();
    CHECK(w.resonant_velocity() / kCgs.c == Approx((1.0 + beta) / (3.0 - beta)).epsilon(1e-15));
    // Offset from the beam velocity is about 1 / (8 gamma0^2 zeta) spreads.
    CHECK((w.resonant_velocity() - b.v0()) / b.velocity_spread() ==
          Approx(1.0 / (8.0 * 400.0 * 0.01)).epsilon(0.01));
}

TEST_CASE("slope selection") {
    const auto b = BeamParams::make(10.0, 1e19, 0.01);
    const auto w = resonant_radiation(kLaser, b, ResonanceMode::exact);
    const auto paper = resonant_slope(VelocityDistribution::from_beam(b), b, w, SlopeMode::paper);
    CHECK(paper.slope == Approx(slope_paper(b)));
    CHECK(slope_paper(b) == Approx(1e4 / 1e-4 / (kCgs.c * kCgs.c)));

    const auto shifted = VelocityDistribution::gaussian(w.resonant_velocity() + b.velocity_spread(),
                                                        b.velocity_spread());
    const auto near = resonant_slope(shifted, b, w, SlopeMode::gaussian);
    CHECK(near.used_resonance);
    CHECK(near.slope == Approx(shifted.slope(w.resonant_velocity())));
    CHECK(near.slope > 0.0);

    const auto far = VelocityDistribution::gaussian(w.resonant_velocity() - 9.0 * b.velocity_spread(),
                                                    b.velocity_spread());
    const auto tail = resonant_slope(far, b, w, SlopeMode::gaussian);
    CHECK_FALSE(tail.used_resonance);
    CHECK(tail.slope == Approx(far.max_abs_slope()));
}
