#include <doctest.h>

#include <cmath>
#include <vector>

#include "laserfel/gain.hpp"

using namespace laserfel;
using units::kCgs;
using units::kPi;
using doctest::Approx;

namespace {

const auto kLaser = LaserParams::make(1e-4, 1e18, 1e-12);

double bracket_reference(double t, double a, double w) {
    return -w * std::sin(a * t) / (a * a) + t * std::cos(a * t) + w * t * std::cos(a * t) / a;
}

}  // namespace

TEST_CASE("loss bracket agrees with the closed form away from resonance") {
    const double w = 3e14;
    for (double a : {1e12, -4e12, 2.5e13}) {
        for (double t : {1e-14, 3e-13, 2e-12}) {
            CHECK(loss_bracket(t, a, w) == Approx(bracket_reference(t, a, w)).epsilon(1e-9));
        }
    }
}

TEST_CASE("loss bracket series and direct forms meet at the switch point") {
    const double w = 5e14;
    const double t = 1e-12;
    for (double x : {1e-4, -1e-4, 3e-4}) {
        const double a = x / t;
        const double direct = detail::loss_bracket_direct(t, a, w);
        const double series = detail::loss_bracket_series(t, a, w);
        CHECK(std::abs(direct - series) <= 1e-9 * std::abs(direct));
    }
    CHECK(loss_bracket(t, 0.0, w) == Approx(t));
}

TEST_CASE("loss bracket at whole beat periods") {
    const double a = 2e12, w = 7e13;
    for (int n = 1; n <= 4; ++n) {
        const double t = 2.0 * kPi * n / a;
        CHECK(loss_bracket(t, a, w) == Approx(t * (1.0 + w / a)).epsilon(1e-10));
    }
}

TEST_CASE("energy exchange at exact resonance grows linearly") {
    const auto b = BeamParams::make(10.0, 1e19, 0.01);
    const double Eg = 1e4;
    const auto wave = resonant_radiation(kLaser, b, ResonanceMode::exact, Eg);
    const double k2 = 1e-8;
    const double t = 1e-13;
    const double expected = 1e3 * k2 * kCgs.e * kCgs.e * Eg * Eg / (2.0 * kCgs.m_e) * t;
    CHECK(energy_loss_rate_at(t, 0.0, b, k2, wave) == Approx(expected).epsilon(1e-12));
}

TEST_CASE("normalized gain at the reference design point") {
    const auto b = BeamParams::make(10.0, 1e19, 0.01);
    const auto g = normalized_gain(kLaser, b);
    CHECK(g.gain_paper == Approx(26.4).epsilon(0.5 / 26.4));
    CHECK(g.threshold_product == Approx(0.1 * 1.0 / 1e-4 * kLaser.omega0_tau()));

    const auto full = evaluate_gain(kLaser, b, VelocityDistribution::from_beam(b), GainModes{});
    CHECK(full.feasible);
    CHECK(full.gain_factor == Approx(std::exp(g.gain_paper)));
}

TEST_CASE("normalized gain scalings") {
    const auto base = normalized_gain(kLaser, BeamParams::make(10.0, 1e19, 0.01)).gain_paper;
    CHECK(normalized_gain(kLaser, BeamParams::make(20.0, 1e19, 0.01)).gain_paper ==
          Approx(base / 8.0));
    CHECK(normalized_gain(kLaser, BeamParams::make(10.0, 3e19, 0.01)).gain_paper ==
          Approx(3.0 * base));
    CHECK(normalized_gain(kLaser, BeamParams::make(10.0, 1e19, 0.02)).gain_paper ==
          Approx(base / 4.0));
    const auto longer = LaserParams::make(1e-4, 1e18, 2e-12);
    CHECK(normalized_gain(longer, BeamParams::make(10.0, 1e19, 0.01)).gain_paper ==
          Approx(2.0 * base));
}

TEST_CASE("empty beam gives no gain") {
    const auto b = BeamParams::make(10.0, 0.0, 0.01);
    for (auto method : {GainMethod::normalized, GainMethod::landau}) {
        GainModes m;
        m.method = method;
        const auto g = evaluate_gain(kLaser, b, VelocityDistribution::from_beam(b), m);
        CHECK(g.gain_paper == 0.0);
        CHECK(g.gain_exact == 0.0);
        CHECK_FALSE(g.feasible);
        CHECK(g.gain_factor == 1.0);
    }
}

TEST_CASE("assembled growth rate with the crude estimates") {
    // With the crude kappa and slope the assembly reproduces the closed formula's
    // 1.4e-2 coefficient, but with one power of gamma0 instead of three.
    for (double gamma0 : {10.0, 30.0, 100.0}) {
        const auto b = BeamParams::make(gamma0, 1e19, 0.01);
        const auto g = evaluate_gain(kLaser, b, VelocityDistribution::from_beam(b), GainModes{});
        CHECK(g.gain_exact / g.gain_paper == Approx(gamma0 * gamma0).epsilon(0.01));
    }
}

TEST_CASE("power-law fit") {
    const std::vector<double> x{1.0, 2.0, 5.0, 11.0};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, -2.5));
    CHECK(fit_power_law(x, y) == Approx(-2.5).epsilon(1e-12));
}

TEST_CASE("gamma0 exponents of the gain") {
    const auto b = BeamParams::make(10.0, 1e19, 0.01);
    const std::vector<double> grid{10.0, 30.0, 100.0};
    const auto rows = scaling_audit(kLaser, b, grid);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].label == "normalized");
    CHECK(rows[0].fitted_exponent == Approx(-3.0).epsilon(1e-9));
    for (const auto& r : rows)
        if (r.label == "landau(kappa=exact,slope=paper)")
            CHECK(r.fitted_exponent == Approx(-5.0).epsilon(0.01));
    CHECK_THROWS(scaling_audit(kLaser, b, std::vector<double>{10.0, 10.0, 20.0}));
}
