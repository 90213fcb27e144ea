#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "laserfel/beam_laser.hpp"
#include "laserfel/ensemble.hpp"
#include "laserfel/gain.hpp"
#include "laserfel/quantum_limits.hpp"

namespace laserfel::cli {

/// Parse or validation failure; line is 0 when the problem is not tied to one line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& message, int line = 0, std::string key = {});

    int line() const { return line_; }
    const std::string& key() const { return key_; }

private:
    int line_;
    std::string key_;
};

struct CaseModes {
    KappaMode kappa = KappaMode::paper;
    SlopeMode slope = SlopeMode::paper;
    ResonanceMode resonance = ResonanceMode::approx;
    BoostMode boost = BoostMode::paper;
    units::IntensityConvention intensity_convention = units::IntensityConvention::flux;
    GainMethod gain_method = GainMethod::normalized;

    bool operator==(const CaseModes&) const = default;
};

/// One design point in engineering units.
struct CaseConfig {
    double wavelength_um = 0;
    double intensity_W_cm2 = 0;
    double duration_ps = 0;
    double gamma0 = 0;
    double density_cm3 = 0;
    double spread_fraction = 0;
    CaseModes modes;

    bool operator==(const CaseConfig&) const = default;

    LaserParams laser() const;
    BeamParams beam() const;
    GainModes gain_modes() const;
};

/// Names of the numeric case fields, in column order.
const std::vector<std::string>& case_field_names();
double case_field(const CaseConfig& c, std::string_view name);
void set_case_field(CaseConfig& c, std::string_view name, double value);
/// Throws ConfigError when a numeric field is out of range.
void validate_case_field(std::string_view name, double value);
void validate(const CaseConfig& c);

struct Axis {
    std::string field;
    std::vector<double> values;
};

struct ScanConfig {
    CaseConfig base;
    std::vector<Axis> axes;
    std::vector<std::string> outputs;  // empty selects the gain report columns
};

struct SimulationConfig {
    CaseConfig base;
    EnsembleConfig ensemble;
    double seed_field_ratio = 1e-4;              // E_g(0) / E0
    std::optional<double> mean_offset_spreads;   // distribution mean - v_res, in spreads
};

struct AuditConfig {
    CaseConfig base;
    std::vector<double> gamma_grid{10.0, 30.0, 100.0};
};

inline constexpr std::size_t kMaxGridPoints = 10'000'000;
inline constexpr std::size_t kMaxAxes = 3;

/// Flat `key = value` text with `#` comments. Keys are unique.
class ConfigDocument {
public:
    static ConfigDocument parse(std::string_view text);

    bool has(std::string_view key) const;
    std::optional<std::string> get(std::string_view key) const;
    int line_of(std::string_view key) const;
    std::vector<std::string> keys_with_prefix(std::string_view prefix) const;
    const std::map<std::string, std::pair<std::string, int>, std::less<>>& entries() const {
        return entries_;
    }

private:
    std::map<std::string, std::pair<std::string, int>, std::less<>> entries_;
};

CaseConfig parse_case(std::string_view text);
ScanConfig parse_scan(std::string_view text);
SimulationConfig parse_simulation(std::string_view text);
AuditConfig parse_audit(std::string_view text);

std::string serialize(const CaseConfig& c);

/// Full-precision scientific notation (17 significant digits).
std::string format_number(double x);

std::string read_text_file(const std::string& path);

std::string to_string(KappaMode m);
std::string to_string(SlopeMode m);
std::string to_string(ResonanceMode m);
std::string to_string(BoostMode m);
std::string to_string(units::IntensityConvention m);
std::string to_string(GainMethod m);

}  // namespace laserfel::cli
