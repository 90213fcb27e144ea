#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "laserfel/commands.hpp"

namespace {

using namespace laserfel::cli;

struct Options {
    std::string config;
    std::string output;
    std::string format = "csv";
    std::string timeseries;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
    bool quiet = false;
};

void write_output(const std::string& text, const Options& opt) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + opt.output + "'");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + opt.output + "'");
}

std::string render(const Table& table, const Options& opt) {
    return opt.format == "long" ? table.to_long_csv() : table.to_csv();
}

void note(const Options& opt, const std::string& message) {
    if (!opt.quiet) std::cerr << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laser-undulator FEL design calculator and particle-ensemble checker"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config, "key = value configuration file")->required();
        sub->add_option("--output", opt.output, "write results here instead of stdout");
        sub->add_flag("--quiet", opt.quiet, "suppress progress notes on stderr");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "csv, or long for plotting")
            ->check(CLI::IsMember({"csv", "long"}));
    };

    auto* gain = app.add_subcommand("gain", "single-case gain report");
    auto* limits = app.add_subcommand("limits", "quantum-diffraction limits report");
    auto* scan = app.add_subcommand("scan", "parameter sweep");
    auto* simulate = app.add_subcommand("simulate", "particle-ensemble growth-rate run");
    auto* audit = app.add_subcommand("audit", "scaling and consistency report");
    for (auto* sub : {gain, limits, scan, simulate, audit}) add_common(sub);
    for (auto* sub : {gain, limits, scan, simulate}) add_format(sub);
    scan->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
    simulate->add_option("--seed", opt.seed, "override ensemble.seed");
    simulate->add_option("--timeseries", opt.timeseries, "also write the per-step energy series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (gain->parsed()) {
            write_output(render(cmd_gain(parse_case(read_text_file(opt.config))), opt), opt);
        } else if (limits->parsed()) {
            const auto c = parse_case(read_text_file(opt.config));
            const auto table = cmd_limits(c);
            if (c.laser().I18() > 1.0) note(opt, std::string("warning: ") + laserfel::kHighIntensityWarning);
            write_output(render(table, opt), opt);
        } else if (scan->parsed()) {
            const auto s = parse_scan(read_text_file(opt.config));
            const auto table = cmd_scan(s, opt.threads);
            note(opt, "scan: " + std::to_string(table.rows.size()) + " grid points");
            write_output(render(table, opt), opt);
        } else if (simulate->parsed()) {
            auto s = parse_simulation(read_text_file(opt.config));
            if (opt.seed) s.ensemble.seed = *opt.seed;
            note(opt, "simulate: " + std::to_string(s.ensemble.n_particles) + " particles, seed " +
                          std::to_string(s.ensemble.seed));
            const auto result = cmd_simulate(s);
            if (result.run.truncated) note(opt, "simulate: run stopped early: " + result.run.diagnostic);
            write_output(render(result.summary, opt), opt);
            if (!opt.timeseries.empty()) {
                Options series = opt;
                series.output = opt.timeseries;
                write_output(render(result.timeseries, opt), series);
            }
        } else if (audit->parsed()) {
            write_output(cmd_audit(parse_audit(read_text_file(opt.config))), opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
