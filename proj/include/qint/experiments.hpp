#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qint/report.hpp"

namespace qint {

// Shared configuration of the experiment harness. nodes scales the leading
// quadrature of a command (per-axis count for sphere grids, loop count for
// tori); tol overrides the command's headline tolerance when finite.
struct ExperimentConfig {
    std::uint64_t seed = 20250815;
    int nodes = 32;
    double tol = std::numeric_limits<double>::quiet_NaN();
};

Report run_verify_forms(const ExperimentConfig& cfg);
Report run_kernel_norm(const ExperimentConfig& cfg);
Report run_reproduce(const ExperimentConfig& cfg);
Report run_mb_identity(const ExperimentConfig& cfg);
Report run_leray_identity(const ExperimentConfig& cfg);
Report run_line_cauchy(const ExperimentConfig& cfg);
Report run_torus_cg(const ExperimentConfig& cfg);
Report run_dbar_solve(const ExperimentConfig& cfg);
Report run_compat(const ExperimentConfig& cfg);
Report run_hull(const ExperimentConfig& cfg);
Report run_convexity(const ExperimentConfig& cfg);
Report run_psh(const ExperimentConfig& cfg);
Report run_jacobi(const ExperimentConfig& cfg);

// Dispatch shared by the CLI and the acceptance harness. find_runner returns
// nullptr for unknown command names.
using Runner = Report (*)(const ExperimentConfig&);
Runner find_runner(const std::string& command);
const std::vector<std::string>& command_names();

}  // namespace qint
