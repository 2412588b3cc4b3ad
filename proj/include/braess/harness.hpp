#pragma once

#include <string>

#include "braess/config.hpp"
#include "braess/output.hpp"

namespace braess {

// Subcommand bodies, shared between the CLI binary and the test suites.
// Each writes its artifact set into out_dir and returns nothing; failures
// throw. Outputs are a pure function of the config (jobs changes wall time
// only).
void cmd_simulate(const ExperimentConfig& cfg, const std::string& out_dir, int jobs);
void cmd_sweep(const ExperimentConfig& cfg, const std::string& out_dir, int jobs);
void cmd_metagame(const ExperimentConfig& cfg, const std::string& out_dir, int jobs);
void cmd_correlate(const ExperimentConfig& cfg, const std::string& out_dir, int jobs);
void cmd_metrics(const std::string& trajectory_csv_path, const std::string& out_dir);

int run_cli(int argc, char** argv);

}  // namespace braess
