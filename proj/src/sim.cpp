#include "braess/sim.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace braess {

void SimConfig::validate() const {
    if (horizon < 1) throw std::invalid_argument("SimConfig: T must be >= 1");
    if (static_cast<int>(params.size()) != spec.n)
        throw std::invalid_argument("SimConfig: params length must equal n");
    if (!agent_seeds.empty() && static_cast<int>(agent_seeds.size()) != spec.n)
        throw std::invalid_argument("SimConfig: agent_seeds length must equal n");
    // AgentParams enforces beta <= alpha at construction; re-check after copies
    for (const auto& p : params) {
        if (p.beta > p.alpha) throw std::invalid_argument("SimConfig: beta > alpha");
    }
}

Trajectory run_simulation(const SimConfig& config) {
    config.validate();
    const int n = config.spec.n;
    const long T = config.horizon;

    std::vector<Rng> streams;
    streams.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const std::uint64_t s = config.agent_seeds.empty()
                                    ? derive_seed(config.seed, static_cast<std::uint64_t>(j))
                                    : config.agent_seeds[static_cast<std::size_t>(j)];
        streams.emplace_back(s);
    }

    std::vector<QTable> tables;
    tables.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) tables.push_back(init_qtable(config.init, streams[j]));

    Trajectory traj;
    traj.system_cost_series.reserve(static_cast<std::size_t>(T));
    traj.per_agent_cost_sum.assign(static_cast<std::size_t>(n), 0.0);
    if (config.record_counts) traj.counts.reserve(static_cast<std::size_t>(T));
    if (config.record_per_agent) traj.per_agent_costs.reserve(static_cast<std::size_t>(T));

    std::vector<Action> actions(static_cast<std::size_t>(n));
    for (long t = 0; t < T; ++t) {
        // simultaneous moves from the pre-step q-tables
        for (int j = 0; j < n; ++j)
            actions[static_cast<std::size_t>(j)] =
                select_action(tables[j], config.params[static_cast<std::size_t>(j)].epsilon,
                              streams[j]);

        const FlowCounts f = count_actions(actions);
        const auto costs = all_action_costs(f, n);

        std::vector<double> step_costs;
        if (config.record_per_agent) step_costs.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const Action a = actions[static_cast<std::size_t>(j)];
            const double r = costs[static_cast<int>(a)];
            const auto& p = config.params[static_cast<std::size_t>(j)];
            update_self(tables[j], a, r, p.alpha);
            if (p.beta > 0.0) {
                if (config.literal_monitoring)
                    update_monitored_literal(tables[j], a, r, p.beta);
                else
                    update_monitored(tables[j], a, costs, p.beta);
            }
            traj.per_agent_cost_sum[static_cast<std::size_t>(j)] += r;
            if (config.record_per_agent) step_costs[static_cast<std::size_t>(j)] = r;
        }

        traj.system_cost_series.push_back(system_cost(f, n));
        if (config.record_counts) traj.counts.push_back(f);
        if (config.record_per_agent) traj.per_agent_costs.push_back(std::move(step_costs));
    }
    return traj;
}

double time_averaged_cost(const Trajectory& traj) {
    if (traj.system_cost_series.empty())
        throw std::invalid_argument("time_averaged_cost: empty series");
    double sum = 0.0;
    for (double c : traj.system_cost_series) sum += c;
    return sum / static_cast<double>(traj.system_cost_series.size());
}

double agent_time_averaged_cost(const Trajectory& traj, int j) {
    if (j < 0 || j >= traj.n_agents())
        throw std::out_of_range("agent_time_averaged_cost: agent index");
    return traj.per_agent_cost_sum[static_cast<std::size_t>(j)] /
           static_cast<double>(traj.horizon());
}

int default_jobs() {
    if (const char* env = std::getenv("BRAESS_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace braess
