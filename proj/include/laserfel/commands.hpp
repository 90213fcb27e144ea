#pragma once

#include <string>
#include <vector>

#include "laserfel/config.hpp"
#include "laserfel/csv.hpp"
#include "laserfel/ensemble.hpp"

namespace laserfel::cli {

/// Column set of the gain report; a scan without outputs uses it too.
const std::vector<std::string>& gain_columns();
/// Column set of the quantum-limits report.
const std::vector<std::string>& limits_columns();
/// Every quantity a scan may request.
std::vector<std::string> available_outputs();

Table cmd_gain(const CaseConfig& c);
Table cmd_limits(const CaseConfig& c);
/// Rows in lexicographic grid order (first axis slowest); columns are the scanned
/// fields followed by the requested outputs.
Table cmd_scan(const ScanConfig& scan, unsigned threads = 0);

struct SimulationInputs {
    LaserParams laser;
    BeamParams beam;
    VelocityDistribution dist;
    double E_g_initial;
};

/// Library-level inputs a simulation config resolves to.
SimulationInputs simulation_inputs(const SimulationConfig& sim);

struct SimulationOutput {
    Table summary;
    Table timeseries;  // t, field_energy_density, kinetic_energy_density, residual
    RunResult run;
    OracleComparison comparison;
};

SimulationOutput cmd_simulate(const SimulationConfig& sim);

std::string cmd_audit(const AuditConfig& audit);

}  // namespace laserfel::cli
