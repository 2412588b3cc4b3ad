#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "braess/game.hpp"
#include "braess/learner.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace braess {

struct SimConfig {
    GameSpec spec;
    long horizon;                    // T, rounds
    std::vector<AgentParams> params; // length n
    InitMode init = InitMode::Random;
    std::uint64_t seed = 1;

    bool record_counts = true;       // FlowCounts per step
    bool record_per_agent = false;   // full n x T cost matrix
    bool literal_monitoring = false; // Eq.-literal monitoring ablation

    // overrides the derived per-agent streams when non-empty (testing hook)
    std::vector<std::uint64_t> agent_seeds;

    void validate() const;
};

struct Trajectory {
    std::vector<FlowCounts> counts;          // empty unless recorded
    std::vector<double> system_cost_series;  // C_t, length T
    std::vector<double> per_agent_cost_sum;  // length n
    std::vector<std::vector<double>> per_agent_costs;  // optional, [t][j]

    long horizon() const { return static_cast<long>(system_cost_series.size()); }
    int n_agents() const { return static_cast<int>(per_agent_cost_sum.size()); }
};

// T synchronous rounds: all agents select from their pre-step q-tables,
// counts and per-action costs are computed once, then each agent applies the
// self update and (if beta > 0) the monitored update. Deterministic in seed.
Trajectory run_simulation(const SimConfig& config);

// <C> = (1/T) sum_t C_t
double time_averaged_cost(const Trajectory& traj);

// <C_j> = (1/T) sum_t r_{j,t}
double agent_time_averaged_cost(const Trajectory& traj, int j);

inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t rep) {
    return derive_seed(master, rep);
}

// Runs `reps` independent repetitions of the config, repetition k seeded with
// child_seed(config.seed, k), and maps each trajectory through `fn`.
// jobs > 1 parallelizes over repetitions with OpenMP; results are stored by
// repetition index, so the job count never affects the output.
template <typename Fn>
auto run_batch(const SimConfig& config, int reps, int jobs, Fn&& fn)
    -> std::vector<decltype(fn(0, std::uint64_t{}, std::declval<const Trajectory&>()))> {
    using Row = decltype(fn(0, std::uint64_t{}, std::declval<const Trajectory&>()));
    if (reps < 1) throw std::invalid_argument("run_batch: reps must be >= 1");
    config.validate();
    std::vector<Row> rows(static_cast<std::size_t>(reps));
#if defined(_OPENMP)
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (int k = 0; k < reps; ++k) {
            SimConfig c = config;
            c.seed = child_seed(config.seed, static_cast<std::uint64_t>(k));
            const Trajectory traj = run_simulation(c);
            rows[static_cast<std::size_t>(k)] = fn(k, c.seed, traj);
        }
        return rows;
    }
#else
    (void)jobs;
#endif
    for (int k = 0; k < reps; ++k) {
        SimConfig c = config;
        c.seed = child_seed(config.seed, static_cast<std::uint64_t>(k));
        const Trajectory traj = run_simulation(c);
        rows[static_cast<std::size_t>(k)] = fn(k, c.seed, traj);
    }
    return rows;
}

// Serial reference for the batch runner; bit-identical to run_batch.
template <typename Fn>
auto run_batch_serial(const SimConfig& config, int reps, Fn&& fn) {
    return run_batch(config, reps, 1, std::forward<Fn>(fn));
}

int default_jobs();

}  // namespace braess
