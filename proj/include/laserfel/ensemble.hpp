#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "laserfel/beam_laser.hpp"

namespace laserfel {

/// Macro-electron of the pendulum model. Coordinates are offsets in the frame of
/// the ponderomotive beat wave (phase velocity v_res = omega / q), which keeps the
/// tiny velocity changes resolvable next to v ~ c:
///   lab position  z   = v_res t + z_rel
///   lab velocity  v_z = v_res + v_rel0 + dv
/// The pendulum phase phi0 + (k0 + k_g) z + (c k0 - c k_g) t equals phi0 + q z_rel.
struct Particle {
    double z_rel = 0;   // [cm]
    double dv = 0;      // velocity change since t = 0 [cm/s]
    double v_rel0 = 0;  // initial velocity relative to v_res [cm/s]
    double phi0 = 0;    // [rad]
    double weight = 1;

    double velocity_offset() const { return v_rel0 + dv; }
    double lab_velocity(double v_res) const { return v_res + v_rel0 + dv; }
    double lab_position(double t, double v_res) const { return v_res * t + z_rel; }
    /// Change of v_z^2 since t = 0, evaluated without cancellation.
    double dv2(double v_res) const { return dv * (2.0 * (v_res + v_rel0) + dv); }
};

enum class PhaseSampling { uniform, stratified };
enum class VelocitySampling { distribution, delta };
/// Pendulum coupling: the kappa of the closed pendulum equation (closed) or the
/// prefactor of the unreduced second-order equation, which is gamma0 times larger (unreduced).
enum class PendulumCoupling { closed, unreduced };

struct EnsembleConfig {
    std::size_t n_particles = 1'000'000;
    double dt = 0;     // [s]; 0 picks dt from steps_per_beat
    double t_end = 0;  // [s]; 0 picks landau_times / (k_g dv)
    std::uint64_t seed = 1;
    PhaseSampling phase_sampling = PhaseSampling::stratified;
    VelocitySampling velocity_sampling = VelocitySampling::distribution;
    std::size_t phases_per_beamlet = 4;
    double steps_per_beat = 24;
    double landau_times = 20;
    PendulumCoupling coupling = PendulumCoupling::closed;
    ResonanceMode resonance = ResonanceMode::exact;
    std::size_t bootstrap_resamples = 200;
    unsigned threads = 0;
};

void validate(const EnsembleConfig& config);

/// Stratified mode: particle i = j * n_phi + k carries phase 2 pi (k n_v + j) / N, so the
/// whole ensemble holds N equally spaced phases and every beamlet j (one velocity) holds
/// n_phi equally spaced phases. Velocities come from stratified inverse-CDF quantiles.
std::vector<Particle> sample_particles(const EnsembleConfig& config,
                                       const VelocityDistribution& dist, double v_res);

/// Particles per bootstrap group: phases_per_beamlet for stratified phases, else 1.
std::size_t beamlet_size(const EnsembleConfig& config);

/// Pendulum drive: d(dv)/dt = accel sin(phi0 + q z_rel), d(z_rel)/dt = v_rel0 + dv.
struct PendulumDrive {
    double accel;  // kappa e E_g / m_e [cm/s^2]
    double q;      // k0 + k_g [1/cm]
};

PendulumDrive pendulum_drive(const LaserParams& laser, const BeamParams& beam,
                             const RadiationWave& radiation, PendulumCoupling coupling);

/// Classical RK4, fixed step. Throws std::invalid_argument when dt resolves fewer than
/// 20 steps of the fastest beat period 2 pi / |alpha|.
void integrate_pendulum(std::span<Particle> particles, const PendulumDrive& drive, double dt,
                        std::size_t steps);

/// Convenience overload: fixed field radiation.field_amplitude(), timing from config.
void integrate_pendulum(std::span<Particle> particles, const LaserParams& laser,
                        const BeamParams& beam, const RadiationWave& radiation,
                        const EnsembleConfig& config);

struct Timing {
    double dt;
    double t_end;
    std::size_t steps;
    double alpha_max;
};

Timing resolve_timing(const EnsembleConfig& config, std::span<const Particle> particles,
                      const RadiationWave& radiation, double spread);

struct ExchangeResult {
    std::vector<double> times;
    std::vector<double> energy;  // (m/2) gamma0^3 <d(v^2)> per electron [erg]
    double window_start = 0;
    double measured_rate = 0;         // secular rate over the window [erg/s]
    double measured_rate_se = 0;      // bootstrap standard error
    double regression_rate = 0;       // least-squares slope over the window
    double predicted_secular = 0;     // late-time limit of the phase-averaged bracket
    double predicted_landau = 0;      // rate implied by the Landau growth rate formula
    double predicted_bracket_end = 0; // bracket averaged over the sampled velocities at t_end
    double measured_rate_end = 0;     // finite-difference rate at t_end
    bool conclusive = false;          // |predicted_secular| >= 3 standard errors
    double alpha = 0;                 // q <v> - omega
    double beat_omega = 0;
};

/// Fixed-field ensemble run measuring the energy exchanged with the beat wave.
ExchangeResult ensemble_energy_exchange(const EnsembleConfig& config, const LaserParams& laser,
                                        const BeamParams& beam, const VelocityDistribution& dist,
                                        const RadiationWave& radiation);

/// Central (interior) or one-sided second-order derivative of a uniformly sampled series.
double finite_difference_rate(std::span<const double> series, double dt, std::size_t index);

struct RunResult {
    std::vector<double> times;
    std::vector<double> kinetic_energy_density;  // n_b (m/2) gamma0^3 <d(v^2)> [erg/cm^3]
    std::vector<double> field_energy_density;    // E_g^2 / 4 pi [erg/cm^3]
    std::vector<double> growth_rate;             // d ln(E_g^2)/dt [1/s]
    std::vector<double> residual;                // |d(total)| / total per step

    double growth_rate_fit = 0;       // log-linear fit of E_g^2 over the window [1/s]
    double growth_rate_transfer = 0;  // -(energy given up by electrons) / integral of E_g^2/4pi
    double growth_rate_se = 0;        // bootstrap standard error
    double window_start = 0;
    double max_residual = 0;
    bool truncated = false;
    std::string diagnostic;

    double dt = 0;
    std::size_t steps = 0;
    double beat_omega = 0;  // c (k_g - k0)
    double alpha = 0;       // q <v> - omega at the distribution mean
    double resonant_velocity = 0;
    double q = 0;
};

/// Pendulum ensemble coupled to the radiated field through energy bookkeeping:
/// each step the field energy density changes by exactly minus the electrons' gain.
RunResult self_consistent_run(const EnsembleConfig& config, const LaserParams& laser,
                              const BeamParams& beam, const VelocityDistribution& dist,
                              double E_g_initial);

struct OracleComparison {
    double predicted;  // Landau growth rate, exact kappa and analytic gaussian slope
    double measured;
    double ratio;      // measured / predicted
    bool sign_agrees;
    bool within_factor_two;
    bool consistent_with_zero;  // |measured| <= 3 se
};

OracleComparison compare_with_landau(const RunResult& run, const LaserParams& laser,
                                     const BeamParams& beam, const VelocityDistribution& dist);

/// Full relativistic single-electron motion in the undulator plane wave
///   E = E0 cos(k0 z + w0 t) x,  B = -E0 cos(k0 z + w0 t) y.
struct ParticleState {
    double t = 0;
    std::array<double, 3> r{};  // [cm]
    std::array<double, 3> u{};  // gamma v [cm/s]

    double gamma() const;
    std::array<double, 3> velocity() const;
};

/// RK4 in (r, gamma v); dt may be negative.
ParticleState advance_relativistic(ParticleState state, const LaserParams& laser, double dt,
                                   std::size_t steps);

struct Trajectory {
    std::vector<ParticleState> samples;
    std::vector<std::string> warnings;
};

/// Starts at z = 0 with v = v0 z; rejects dt coarser than 20 steps per laser period as
/// seen by the electron, 2 pi / (k0 (c + v0)).
Trajectory integrate_single_particle(const LaserParams& laser, const BeamParams& beam,
                                     double t_end, double dt, std::size_t sample_every = 1);

/// Least-squares amplitude of v_x against sin/cos of the local laser phase.
double fit_quiver_amplitude(const Trajectory& trajectory, const LaserParams& laser);

}  // namespace laserfel
