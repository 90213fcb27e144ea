#include "laserfel/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace laserfel::cli {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string located(const std::string& message, int line, const std::string& key) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!key.empty()) out += "'" + key + "': ";
    return out + message;
}

double parse_number(const std::string& text, int line, const std::string& key) {
    if (text.empty()) throw ConfigError("expected a number, got nothing", line, key);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v))
        throw ConfigError("expected a finite number, got '" + text + "'", line, key);
    return v;
}

std::uint64_t parse_unsigned(const std::string& text, int line, const std::string& key) {
    std::uint64_t v = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        // Accept integral values written in scientific notation, e.g. 1e6.
        const double d = parse_number(text, line, key);
        if (d < 0 || d != std::floor(d) || d > 1.8e19)
            throw ConfigError("expected a non-negative integer, got '" + text + "'", line, key);
        return static_cast<std::uint64_t>(d);
    }
    return v;
}

template <class E>
E parse_enum(const std::string& text, const std::vector<std::pair<std::string, E>>& tags, int line,
             const std::string& key) {
    for (const auto& [name, value] : tags)
        if (name == text) return value;
    std::string allowed;
    for (const auto& [name, value] : tags) allowed += (allowed.empty() ? "" : "|") + name;
    throw ConfigError("unknown value '" + text + "' (expected " + allowed + ")", line, key);
}

const std::vector<std::pair<std::string, KappaMode>> kKappaTags{{"exact", KappaMode::exact},
                                                                {"paper", KappaMode::paper}};
const std::vector<std::pair<std::string, SlopeMode>> kSlopeTags{{"gaussian", SlopeMode::gaussian},
                                                                {"paper", SlopeMode::paper}};
const std::vector<std::pair<std::string, ResonanceMode>> kResonanceTags{
    {"exact", ResonanceMode::exact}, {"approx", ResonanceMode::approx}};
const std::vector<std::pair<std::string, BoostMode>> kBoostTags{{"exact", BoostMode::exact},
                                                                {"paper", BoostMode::paper}};
const std::vector<std::pair<std::string, units::IntensityConvention>> kConventionTags{
    {"flux", units::IntensityConvention::flux}, {"paper", units::IntensityConvention::paper_literal}};
const std::vector<std::pair<std::string, GainMethod>> kMethodTags{
    {"normalized", GainMethod::normalized}, {"landau", GainMethod::landau}};
const std::vector<std::pair<std::string, PhaseSampling>> kPhaseTags{
    {"stratified", PhaseSampling::stratified}, {"uniform", PhaseSampling::uniform}};
const std::vector<std::pair<std::string, VelocitySampling>> kVelocityTags{
    {"distribution", VelocitySampling::distribution}, {"delta", VelocitySampling::delta}};
const std::vector<std::pair<std::string, PendulumCoupling>> kCouplingTags{
    {"closed", PendulumCoupling::closed}, {"unreduced", PendulumCoupling::unreduced}};

template <class E>
std::string tag_of(E value, const std::vector<std::pair<std::string, E>>& tags) {
    for (const auto& [name, v] : tags)
        if (v == value) return name;
    return "?";
}

const std::vector<std::string> kModeKeys{"modes.kappa",    "modes.slope",
                                         "modes.resonance", "modes.boost",
                                         "modes.intensity_convention", "modes.gain_method"};

bool is_case_key(const std::string& key) {
    const auto& f = case_field_names();
    return std::find(f.begin(), f.end(), key) != f.end() ||
           std::find(kModeKeys.begin(), kModeKeys.end(), key) != kModeKeys.end();
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

bool is_section_key(const std::string& key) {
    return starts_with(key, "axis.") || key == "outputs" || starts_with(key, "ensemble.") ||
           starts_with(key, "audit.");
}

/// Rejects keys that belong to no section; keys of other subcommands are tolerated so
/// one file can drive several commands.
void check_known_keys(const ConfigDocument& doc) {
    for (const auto& [key, entry] : doc.entries())
        if (!is_case_key(key) && !is_section_key(key))
            throw ConfigError("unknown key", entry.second, key);
}

CaseConfig read_case(const ConfigDocument& doc) {
    CaseConfig c;
    for (const auto& name : case_field_names()) {
        const auto v = doc.get(name);
        if (!v) throw ConfigError("missing required key", 0, name);
        const int line = doc.line_of(name);
        const double x = parse_number(*v, line, name);
        try {
            validate_case_field(name, x);
        } catch (const ConfigError& e) {
            throw ConfigError(e.what(), line);
        }
        set_case_field(c, name, x);
    }
    auto mode = [&](const std::string& key, auto& target, const auto& tags) {
        if (auto v = doc.get(key)) target = parse_enum(*v, tags, doc.line_of(key), key);
    };
    mode("modes.kappa", c.modes.kappa, kKappaTags);
    mode("modes.slope", c.modes.slope, kSlopeTags);
    mode("modes.resonance", c.modes.resonance, kResonanceTags);
    mode("modes.boost", c.modes.boost, kBoostTags);
    mode("modes.intensity_convention", c.modes.intensity_convention, kConventionTags);
    mode("modes.gain_method", c.modes.gain_method, kMethodTags);
    return c;
}

std::vector<double> parse_axis_values(const std::string& text, int line, const std::string& key) {
    if (starts_with(text, "log(")) {
        if (text.back() != ')') throw ConfigError("unterminated log(...)", line, key);
        const auto args = split(std::string_view(text).substr(4, text.size() - 5), ',');
        if (args.size() != 3) throw ConfigError("log(start, stop, count) takes 3 arguments", line, key);
        const double a = parse_number(args[0], line, key);
        const double b = parse_number(args[1], line, key);
        const auto n = parse_unsigned(args[2], line, key);
        if (!(a > 0) || !(b > 0)) throw ConfigError("log range bounds must be positive", line, key);
        if (n < 1 || n > kMaxGridPoints) throw ConfigError("log range count out of range", line, key);
        std::vector<double> v(n);
        if (n == 1) {
            v[0] = a;
            return v;
        }
        const double la = std::log10(a);
        const double lb = std::log10(b);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = std::pow(10.0, la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1));
        }
        v.front() = a;
        v.back() = b;
        return v;
    }
    std::vector<double> v;
    for (const auto& item : split(text, ',')) v.push_back(parse_number(item, line, key));
    return v;
}

}  // namespace

ConfigError::ConfigError(const std::string& message, int line, std::string key)
    : std::runtime_error(located(message, line, key)), line_(line), key_(std::move(key)) {}

const std::vector<std::string>& case_field_names() {
    static const std::vector<std::string> names{"wavelength_um", "intensity_W_cm2", "duration_ps",
                                                "gamma0",        "density_cm3",     "spread_fraction"};
    return names;
}

namespace {
double CaseConfig::*field_member(std::string_view name) {
    if (name == "wavelength_um") return &CaseConfig::wavelength_um;
    if (name == "intensity_W_cm2") return &CaseConfig::intensity_W_cm2;
    if (name == "duration_ps") return &CaseConfig::duration_ps;
    if (name == "gamma0") return &CaseConfig::gamma0;
    if (name == "density_cm3") return &CaseConfig::density_cm3;
    if (name == "spread_fraction") return &CaseConfig::spread_fraction;
    throw ConfigError("unknown case field", 0, std::string(name));
}
}  // namespace

double case_field(const CaseConfig& c, std::string_view name) { return c.*field_member(name); }

void set_case_field(CaseConfig& c, std::string_view name, double value) {
    c.*field_member(name) = value;
}

void validate_case_field(std::string_view name, double value) {
    const std::string key(name);
    field_member(name);
    if (!std::isfinite(value)) throw ConfigError("value must be finite", 0, key);
    if (name == "gamma0") {
        if (!(value > 1.0)) throw ConfigError("gamma0 must exceed 1", 0, key);
    } else if (name == "density_cm3" || name == "intensity_W_cm2") {
        if (!(value >= 0.0)) throw ConfigError("value must be non-negative", 0, key);
    } else if (!(value > 0.0)) {
        throw ConfigError("value must be positive", 0, key);
    }
}

void validate(const CaseConfig& c) {
    for (const auto& name : case_field_names()) validate_case_field(name, case_field(c, name));
}

LaserParams CaseConfig::laser() const {
    return LaserParams::make(wavelength_um * units::kCmPerMicron, intensity_W_cm2,
                             duration_ps * units::kSecPerPicosecond);
}

BeamParams CaseConfig::beam() const {
    return BeamParams::make(gamma0, density_cm3, spread_fraction);
}

GainModes CaseConfig::gain_modes() const {
    return {modes.kappa, modes.slope, modes.resonance, modes.gain_method};
}

ConfigDocument ConfigDocument::parse(std::string_view text) {
    ConfigDocument doc;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string body = trim(std::string_view(raw).substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line);
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", line);
        if (key.find_first_of(" \t") != std::string::npos)
            throw ConfigError("key contains whitespace", line, key);
        if (doc.entries_.count(key))
            throw ConfigError("duplicate key (first set on line " +
                                  std::to_string(doc.entries_.find(key)->second.second) + ")",
                              line, key);
        doc.entries_.emplace(key, std::make_pair(value, line));
    }
    return doc;
}

bool ConfigDocument::has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

std::optional<std::string> ConfigDocument::get(std::string_view key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second.first;
}

int ConfigDocument::line_of(std::string_view key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.second;
}

std::vector<std::string> ConfigDocument::keys_with_prefix(std::string_view prefix) const {
    std::vector<std::string> out;
    for (const auto& [key, entry] : entries_)
        if (starts_with(key, prefix)) out.push_back(key);
    return out;
}

CaseConfig parse_case(std::string_view text) {
    const auto doc = ConfigDocument::parse(text);
    check_known_keys(doc);
    return read_case(doc);
}

ScanConfig parse_scan(std::string_view text) {
    const auto doc = ConfigDocument::parse(text);
    check_known_keys(doc);
    ScanConfig scan;
    scan.base = read_case(doc);

    std::vector<std::pair<std::uint64_t, std::string>> axis_keys;
    for (const auto& key : doc.keys_with_prefix("axis.")) {
        const int line = doc.line_of(key);
        axis_keys.emplace_back(parse_unsigned(key.substr(5), line, key), key);
    }
    std::sort(axis_keys.begin(), axis_keys.end());
    if (axis_keys.size() > kMaxAxes)
        throw ConfigError("at most " + std::to_string(kMaxAxes) + " axes are supported",
                          doc.line_of(axis_keys[kMaxAxes].second), axis_keys[kMaxAxes].second);

    double points = 1;
    for (const auto& [index, key] : axis_keys) {
        const int line = doc.line_of(key);
        const std::string value = *doc.get(key);
        const auto colon = value.find(':');
        if (colon == std::string::npos)
            throw ConfigError("expected 'field: values'", line, key);
        Axis axis;
        axis.field = trim(std::string_view(value).substr(0, colon));
        const auto& names = case_field_names();
        if (std::find(names.begin(), names.end(), axis.field) == names.end())
            throw ConfigError("unknown scan field '" + axis.field + "'", line, key);
        for (const auto& a : scan.axes)
            if (a.field == axis.field)
                throw ConfigError("field '" + axis.field + "' scanned twice", line, key);
        axis.values = parse_axis_values(trim(std::string_view(value).substr(colon + 1)), line, key);
        for (double v : axis.values) {
            try {
                validate_case_field(axis.field, v);
            } catch (const ConfigError& e) {
                throw ConfigError(std::string(e.what()) + " (axis value " + format_number(v) + ")",
                                  line, key);
            }
        }
        points *= static_cast<double>(axis.values.size());
        if (points > static_cast<double>(kMaxGridPoints))
            throw ConfigError("scan grid exceeds " + std::to_string(kMaxGridPoints) + " points",
                              line, key);
        scan.axes.push_back(std::move(axis));
    }

    if (auto outputs = doc.get("outputs")) {
        for (const auto& name : split(*outputs, ',')) {
            if (name.empty()) throw ConfigError("empty output name", doc.line_of("outputs"), "outputs");
            scan.outputs.push_back(name);
        }
    }
    return scan;
}

SimulationConfig parse_simulation(std::string_view text) {
    const auto doc = ConfigDocument::parse(text);
    check_known_keys(doc);
    SimulationConfig sim;
    sim.base = read_case(doc);
    auto& e = sim.ensemble;
    e.resonance = ResonanceMode::exact;

    static const std::vector<std::string> known{
        "ensemble.n_particles",  "ensemble.dt",          "ensemble.t_end",
        "ensemble.seed",         "ensemble.phase_sampling", "ensemble.velocity_sampling",
        "ensemble.phases_per_beamlet", "ensemble.steps_per_beat", "ensemble.landau_times",
        "ensemble.coupling",     "ensemble.resonance",   "ensemble.bootstrap_resamples",
        "ensemble.threads",      "ensemble.seed_field_ratio", "ensemble.mean_offset"};
    for (const auto& key : doc.keys_with_prefix("ensemble."))
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError("unknown key", doc.line_of(key), key);

    auto number = [&](const char* key, auto setter) {
        if (auto v = doc.get(key)) setter(parse_number(*v, doc.line_of(key), key));
    };
    auto integer = [&](const char* key, auto setter) {
        if (auto v = doc.get(key)) setter(parse_unsigned(*v, doc.line_of(key), key));
    };
    auto tag = [&](const char* key, auto& target, const auto& tags) {
        if (auto v = doc.get(key)) target = parse_enum(*v, tags, doc.line_of(key), key);
    };
    integer("ensemble.n_particles", [&](std::uint64_t v) { e.n_particles = v; });
    number("ensemble.dt", [&](double v) { e.dt = v; });
    number("ensemble.t_end", [&](double v) { e.t_end = v; });
    integer("ensemble.seed", [&](std::uint64_t v) { e.seed = v; });
    tag("ensemble.phase_sampling", e.phase_sampling, kPhaseTags);
    tag("ensemble.velocity_sampling", e.velocity_sampling, kVelocityTags);
    integer("ensemble.phases_per_beamlet", [&](std::uint64_t v) { e.phases_per_beamlet = v; });
    number("ensemble.steps_per_beat", [&](double v) { e.steps_per_beat = v; });
    number("ensemble.landau_times", [&](double v) { e.landau_times = v; });
    tag("ensemble.coupling", e.coupling, kCouplingTags);
    tag("ensemble.resonance", e.resonance, kResonanceTags);
    integer("ensemble.bootstrap_resamples", [&](std::uint64_t v) { e.bootstrap_resamples = v; });
    integer("ensemble.threads", [&](std::uint64_t v) { e.threads = static_cast<unsigned>(v); });
    number("ensemble.seed_field_ratio", [&](double v) { sim.seed_field_ratio = v; });
    number("ensemble.mean_offset", [&](double v) { sim.mean_offset_spreads = v; });

    if (!(sim.seed_field_ratio > 0.0))
        throw ConfigError("must be positive", doc.line_of("ensemble.seed_field_ratio"),
                          "ensemble.seed_field_ratio");
    try {
        validate(e);
    } catch (const std::exception& ex) {
        throw ConfigError(std::string("invalid ensemble settings: ") + ex.what());
    }
    return sim;
}

AuditConfig parse_audit(std::string_view text) {
    const auto doc = ConfigDocument::parse(text);
    check_known_keys(doc);
    AuditConfig audit;
    audit.base = read_case(doc);
    for (const auto& key : doc.keys_with_prefix("audit."))
        if (key != "audit.gamma0") throw ConfigError("unknown key", doc.line_of(key), key);
    if (auto v = doc.get("audit.gamma0")) {
        const int line = doc.line_of("audit.gamma0");
        audit.gamma_grid = parse_axis_values(*v, line, "audit.gamma0");
        for (double g : audit.gamma_grid)
            if (!(g > 1.0)) throw ConfigError("gamma0 values must exceed 1", line, "audit.gamma0");
    }
    auto sorted = audit.gamma_grid;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) - sorted.begin() < 3)
        throw ConfigError("the audit needs at least 3 distinct gamma0 values",
                          doc.line_of("audit.gamma0"), "audit.gamma0");
    if (!(audit.base.density_cm3 > 0.0) || !(audit.base.intensity_W_cm2 > 0.0))
        throw ConfigError("the audit needs positive density_cm3 and intensity_W_cm2");
    return audit;
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

std::string serialize(const CaseConfig& c) {
    std::string out;
    for (const auto& name : case_field_names())
        out += name + " = " + format_number(case_field(c, name)) + "\n";
    out += "modes.kappa = " + to_string(c.modes.kappa) + "\n";
    out += "modes.slope = " + to_string(c.modes.slope) + "\n";
    out += "modes.resonance = " + to_string(c.modes.resonance) + "\n";
    out += "modes.boost = " + to_string(c.modes.boost) + "\n";
    out += "modes.intensity_convention = " + to_string(c.modes.intensity_convention) + "\n";
    out += "modes.gain_method = " + to_string(c.modes.gain_method) + "\n";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string to_string(KappaMode m) { return tag_of(m, kKappaTags); }
std::string to_string(SlopeMode m) { return tag_of(m, kSlopeTags); }
std::string to_string(ResonanceMode m) { return tag_of(m, kResonanceTags); }
std::string to_string(BoostMode m) { return tag_of(m, kBoostTags); }
std::string to_string(units::IntensityConvention m) { return tag_of(m, kConventionTags); }
std::string to_string(GainMethod m) { return tag_of(m, kMethodTags); }

}  // namespace laserfel::cli
