#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "laserfel/ensemble.hpp"
#include "laserfel/gain.hpp"

using namespace laserfel;
using units::kCgs;
using units::kPi;
using doctest::Approx;

namespace {

const auto kLaser = LaserParams::make(1e-4, 1e16, 1e-12);
const auto kBeam = BeamParams::make(10.0, 5e19, 0.01);

EnsembleConfig small_config(std::size_t n = 8192) {
    EnsembleConfig c;
    c.n_particles = n;
    c.bootstrap_resamples = 50;
    c.threads = 1;
    return c;
}

VelocityDistribution offset_distribution(double spreads) {
    const double v_res = resonant_radiation(kLaser, kBeam, ResonanceMode::exact).resonant_velocity();
    return VelocityDistribution::gaussian(v_res + spreads * kBeam.velocity_spread(),
                                          kBeam.velocity_spread());
}

}  // namespace

TEST_CASE("stratified sampling layout") {
    auto c = small_config(64);
    c.phases_per_beamlet = 4;
    const auto d = offset_distribution(0.0);
    const auto p = sample_particles(c, d, d.mean());
    REQUIRE(p.size() == 64);
    std::vector<double> phases;
    for (const auto& x : p) phases.push_back(x.phi0);
    std::sort(phases.begin(), phases.end());
    for (std::size_t i = 0; i < phases.size(); ++i)
        CHECK(phases[i] == Approx(2.0 * kPi * double(i) / 64.0));
    for (std::size_t j = 0; j < 16; ++j)
        for (std::size_t k = 1; k < 4; ++k) {
            CHECK(p[j * 4 + k].v_rel0 == p[j * 4].v_rel0);
            CHECK(p[j * 4 + k].phi0 - p[j * 4].phi0 == Approx(kPi * double(k) / 2.0));
        }
    c.n_particles = 65;
    CHECK_THROWS(sample_particles(c, d, d.mean()));
}

TEST_CASE("no radiated field means no exchange") {
    const auto wave = resonant_radiation(kLaser, kBeam, ResonanceMode::exact, 0.0);
    const auto r = ensemble_energy_exchange(small_config(), kLaser, kBeam, offset_distribution(1.0), wave);
    for (double e : r.energy) CHECK(e == 0.0);
    CHECK(r.measured_rate == 0.0);
}

TEST_CASE("constant-force limit at exact resonance") {
    std::vector<Particle> p(1);
    p[0].phi0 = kPi / 2.0;
    const PendulumDrive drive{1e15, 1e8};
    const double t = 1e-13;  // q A t^2 / 2 = 5e-4
    integrate_pendulum(p, drive, t / 100.0, 100);
    CHECK(p[0].dv == Approx(drive.accel * t).epsilon(1e-6));
    CHECK(p[0].z_rel == Approx(0.5 * drive.accel * t * t).epsilon(1e-6));
}

TEST_CASE("opposite phases cancel to first order") {
    std::vector<Particle> p(2);
    p[0].phi0 = 0.3;
    p[1].phi0 = 0.3 + kPi;
    p[0].v_rel0 = p[1].v_rel0 = 2e6;
    const PendulumDrive drive{1e10, 2.5e7};
    const double alpha = drive.q * 2e6;
    const double dt = 2.0 * kPi / alpha / 40.0;
    integrate_pendulum(p, drive, dt, 410);
    CHECK(std::abs(p[0].dv) > 0.0);
    CHECK(std::abs(p[0].dv + p[1].dv) < 1e-3 * std::abs(p[0].dv));
}

TEST_CASE("step guard") {
    std::vector<Particle> p(1);
    p[0].v_rel0 = 1e6;
    const PendulumDrive drive{1e12, 1e7};
    const double period = 2.0 * kPi / (drive.q * 1e6);
    CHECK_NOTHROW(integrate_pendulum(p, drive, period / 20.0, 1));
    CHECK_THROWS_AS(integrate_pendulum(p, drive, period / 19.0, 1), std::invalid_argument);
}

TEST_CASE("monoenergetic beam follows the phase-averaged bracket") {
    auto c = small_config(4096);
    c.velocity_sampling = VelocitySampling::delta;
    c.phases_per_beamlet = 4096;
    const auto d = offset_distribution(0.7);
    const auto wave = resonant_radiation(kLaser, kBeam, ResonanceMode::exact, 1e-4 * kLaser.field());
    const auto r = ensemble_energy_exchange(c, kLaser, kBeam, d, wave);
    CHECK(r.measured_rate_end == Approx(r.predicted_bracket_end).epsilon(0.05));
}

TEST_CASE("energy flows with the sign of the slope") {
    auto c = small_config(65536);
    const auto wave = resonant_radiation(kLaser, kBeam, ResonanceMode::exact, 1e-4 * kLaser.field());
    const auto gain = ensemble_energy_exchange(c, kLaser, kBeam, offset_distribution(1.0), wave);
    const auto loss = ensemble_energy_exchange(c, kLaser, kBeam, offset_distribution(-1.0), wave);
    // Positive slope at resonance: electrons give energy to the wave.
    CHECK(gain.predicted_secular < 0.0);
    CHECK(gain.measured_rate < 0.0);
    CHECK(loss.predicted_secular > 0.0);
    CHECK(loss.measured_rate > 0.0);
}

TEST_CASE("standard error shrinks as one over root N") {
    auto c = small_config(16384);
    c.bootstrap_resamples = 200;
    const auto wave = resonant_radiation(kLaser, kBeam, ResonanceMode::exact, 1e-4 * kLaser.field());
    const auto d = offset_distribution(1.0);
    const double se1 = ensemble_energy_exchange(c, kLaser, kBeam, d, wave).measured_rate_se;
    c.n_particles *= 4;
    const double se4 = ensemble_energy_exchange(c, kLaser, kBeam, d, wave).measured_rate_se;
    CHECK(se1 / se4 == Approx(2.0).epsilon(0.2));
}

TEST_CASE("self-consistent run conserves energy and is schedule independent") {
    auto c = small_config(3 * 8192);
    const auto d = offset_distribution(1.0);
    const double Eg = 1e-4 * kLaser.field();
    const auto a = self_consistent_run(c, kLaser, kBeam, d, Eg);
    CHECK(a.max_residual < 1e-6);
    CHECK_FALSE(a.truncated);
    CHECK(a.growth_rate_fit > 0.0);
    CHECK(a.growth_rate_transfer == Approx(a.growth_rate_fit).epsilon(0.05));

    const auto again = self_consistent_run(c, kLaser, kBeam, d, Eg);
    CHECK(again.field_energy_density == a.field_energy_density);

    c.threads = 3;
    const auto b = self_consistent_run(c, kLaser, kBeam, d, Eg);
    CHECK(std::abs(b.growth_rate_fit - a.growth_rate_fit) <= 1e-12 * std::abs(a.growth_rate_fit));
    CHECK(b.field_energy_density == a.field_energy_density);
}

TEST_CASE("self-consistent run guards") {
    auto c = small_config();
    const auto d = offset_distribution(1.0);
    CHECK_THROWS(self_consistent_run(c, kLaser, kBeam, d, 0.0));
    const auto big = self_consistent_run(c, kLaser, kBeam, d, 0.02 * kLaser.field());
    CHECK(big.truncated);
    CHECK_FALSE(big.diagnostic.empty());
}

TEST_CASE("finite difference rate") {
    std::vector<double> y;
    for (int i = 0; i < 6; ++i) y.push_back(3.0 * i * 0.5 + 1.0);
    for (std::size_t i = 0; i < y.size(); ++i) CHECK(finite_difference_rate(y, 0.5, i) == Approx(3.0));
}

TEST_CASE("relativistic motion is time reversible") {
    const auto laser = LaserParams::make(1e-4, 1e18, 1e-12);
    ParticleState s;
    s.u = {0.0, 0.0, 10.0 * kBeam.v0()};
    const double dt = 2.0 * kPi / (laser.k0() * 2.0 * kCgs.c) / 200.0;
    const auto fwd = advance_relativistic(s, laser, dt, 2000);
    const auto back = advance_relativistic(fwd, laser, -dt, 2000);
    CHECK(std::abs(back.t) < 1e-8 * fwd.t);
    CHECK(std::abs(back.r[2]) < 1e-8 * std::abs(fwd.r[2]));
    CHECK(std::abs(back.u[0]) < 1e-8 * s.u[2]);
    CHECK(back.u[2] == Approx(s.u[2]).epsilon(1e-8));
}

TEST_CASE("fitted quiver amplitude is half the quoted amplitude") {
    const auto laser = LaserParams::make(1e-4, 1e16, 1e-12);
    const auto beam = BeamParams::make(10.0, 1e19, 0.01);
    const double period = 2.0 * kPi / (laser.k0() * (kCgs.c + beam.v0()));
    const auto traj = integrate_single_particle(laser, beam, 40.0 * period, period / 64.0);
    CHECK(traj.warnings.empty());
    const double fitted = fit_quiver_amplitude(traj, laser);
    CHECK(fitted / quiver_velocity(laser, beam).amplitude == Approx(0.5).epsilon(0.02));
    CHECK_THROWS(integrate_single_particle(laser, beam, period, period / 19.0));

    const auto strong = LaserParams::make(1e-4, 1e19, 1e-12);
    const auto warned = integrate_single_particle(strong, BeamParams::make(2.0, 1e19, 0.01),
                                                  period, period / 400.0);
    CHECK_FALSE(warned.warnings.empty());
}
