#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braess/metagame.hpp"
#include "braess/sim.hpp"

namespace braess {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Experiment description, read from a flat sectioned key-value file:
//
//   [game]
//   n = 100
//   [run]
//   T = 100000
//   reps = 40
//   master_seed = 1
//   init = random            # random | nash-eq
//   [params]
//   alpha = 0.7              # scalar, or per-agent list of length n
//   beta = 0
//   epsilon = 0.01
//   [sweep]
//   kind = homogeneous       # homogeneous | deviant | heterogeneous-alpha
//   parameter = alpha        # alpha | epsilon | beta
//   grid = 0.1, 0.3, 0.5     # homogeneous sweep values (strictly increasing)
//   population_grid = ...    # deviant sweep
//   deviant_grid = ...
//   half_widths = ...        # heterogeneous-alpha sweep
//   [output]
//   dir = out
//   plots = timeseries, heatmap
//
// '#' starts a comment; blank lines are ignored.
struct ExperimentConfig {
    int n = 100;
    long horizon = 100000;
    int reps = 40;
    std::uint64_t master_seed = 1;
    InitMode init = InitMode::Random;

    // each of size 1 (shared) or n (per-agent)
    std::vector<double> alpha;
    std::vector<double> beta{0.0};
    std::vector<double> epsilon{0.01};

    enum class SweepKind { None, Homogeneous, Deviant, HeterogeneousAlpha };
    struct Sweep {
        SweepKind kind = SweepKind::None;
        MetaParam parameter = MetaParam::Alpha;
        std::vector<double> grid;
        std::vector<double> grid2;  // beta grid of the (alpha, beta) double sweep
        std::vector<double> population_grid;
        std::vector<double> deviant_grid;
        std::vector<double> half_widths;
        bool operator==(const Sweep&) const = default;
    } sweep;

    struct Output {
        std::string dir = "out";
        std::vector<std::string> plots;
        bool operator==(const Output&) const = default;
    } output;

    bool operator==(const ExperimentConfig&) const = default;

    // params expanded to n agents, validated
    SimConfig to_sim_config() const;
    double param_at(std::size_t agent, const std::vector<double>& v) const;
};

ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text, const std::string& name);
std::string emit_config(const ExperimentConfig& cfg);

}  // namespace braess
