#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braess/metrics.hpp"
#include "braess/sim.hpp"

namespace braess {

enum class MetaParam { Alpha, Epsilon, Beta };

const char* meta_param_name(MetaParam p);

struct MetaGameSpec {
    MetaParam parameter = MetaParam::Alpha;
    std::vector<double> population_grid;
    std::vector<double> deviant_grid;
    int reps = 40;

    void validate() const;
};

// D_j = <C_j> - <C>; negative means agent j travels faster than average.
double advantage(const Trajectory& traj, int j);

struct AdvantageSample {
    double pop_value;
    double dev_value;
    int rep;
    std::uint64_t seed;
    double d;       // D_j of the deviant (agent 0)
    double c_mean;  // <C> of the run
};

struct AdvantageCell {
    double population_value;
    double deviant_value;
    double d_mean;
    double d_stderr;
    double c_mean;
    int reps;
};

std::vector<AdvantageCell> aggregate_cells(const std::vector<AdvantageSample>& samples);

struct HomogeneousRow {
    double value;
    int rep;
    std::uint64_t seed;
    CycleReport report;
};

// All n agents share each grid value; one batch per value.
std::vector<HomogeneousRow> sweep_homogeneous(MetaParam param, const std::vector<double>& grid,
                                              const SimConfig& base, int reps, int jobs);

// (alpha, beta) double sweep; only cells with beta <= alpha are evaluated.
struct HomogeneousRow2 {
    double alpha;
    double beta;
    int rep;
    std::uint64_t seed;
    CycleReport report;
};
std::vector<HomogeneousRow2> sweep_homogeneous_alpha_beta(const std::vector<double>& alpha_grid,
                                                          const std::vector<double>& beta_grid,
                                                          const SimConfig& base, int reps,
                                                          int jobs);

// Agent 0 takes the deviant value, the other n-1 agents the population value.
// Repetition seeds depend only on (population index, rep), giving common
// random numbers across deviant values.
std::vector<AdvantageSample> sweep_deviant(const MetaGameSpec& spec, const SimConfig& base,
                                           int jobs);

// Population agents draw alpha ~ Uniform(0.5 - w, 0.5 + w) per repetition
// from a dedicated stream; agent 0 gets the deviant value. pop_value carries w.
std::vector<AdvantageSample> sweep_heterogeneous_alpha(const std::vector<double>& half_widths,
                                                       const std::vector<double>& deviant_grid,
                                                       const SimConfig& base, int reps, int jobs);

struct BestResponse {
    double population_value;
    double best_deviant;
    double best_d_mean;
    double best_d_stderr;
    bool profitable;  // deviation beats the tolerance and the stderr gate
};

struct NashCertificate {
    std::vector<BestResponse> rows;
    bool no_symmetric_equilibrium;  // every population value admits a deviation
};

NashCertificate nash_certificate(const std::vector<AdvantageCell>& cells, double tolerance = 0.005,
                                 double stderr_gate = 2.0);

}  // namespace braess
