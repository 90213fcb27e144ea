#pragma once

// Physical constants and boundary unit conversions. Everything inside the
// library is Gaussian-CGS; engineering units (W/cm^2, um, ps, keV) are
// converted here and nowhere else.

namespace laserfel::units {

struct PhysicalConstants {
    double c;     // speed of light [cm/s]
    double e;     // elementary charge [statC]
    double m_e;   // electron mass [g]
    double hbar;  // reduced Planck constant [erg s]
};

// CODATA 2018.
inline constexpr PhysicalConstants kCgs{2.99792458e10, 4.803204712570263e-10,
                                        9.1093837015e-28, 1.054571817e-27};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline constexpr double kErgPerSecPerWatt = 1e7;
inline constexpr double kCmPerMicron = 1e-4;
inline constexpr double kCmPerNanometer = 1e-7;
inline constexpr double kSecPerPicosecond = 1e-12;
inline constexpr double kErgPerKeV = 1.602176634e-9;

/// Reference scales used by the engineering formulas.
inline constexpr double kIntensity18 = 1e18;  // W/cm^2
inline constexpr double kDensity20 = 1e20;    // cm^-3

/// How an "intensity" relates to the peak field E0 of a linearly polarized wave.
///  flux:          I = c E0^2 / 8pi   (erg s^-1 cm^-2, the lab convention)
///  paper_literal: I = E0^2 / 8pi     (erg cm^-3, an energy density)
enum class IntensityConvention { flux, paper_literal };

/// Peak field [statvolt/cm] of a wave carrying flux I [W/cm^2].
double intensity_to_field(double intensity_W_cm2);

/// Inverse of intensity_to_field.
double field_to_intensity(double field_statvolt_cm);

/// Intensity measure (CGS) of a field E0 under the given convention.
double field_to_cgs_intensity(double field_statvolt_cm, IntensityConvention convention);

struct WaveNumbers {
    double omega;  // [rad/s]
    double k;      // [1/cm]
};

/// Vacuum frequency and wavenumber of a wavelength in cm.
WaveNumbers wavelength_to_omega(double wavelength_cm);

/// Beam Langmuir frequency sqrt(4 pi n e^2 / m_e) [rad/s].
double beam_plasma_frequency(double density_cm3);

/// Photon energy [keV] of a vacuum wavelength [cm].
double photon_energy_keV(double wavelength_cm);

}  // namespace laserfel::units
