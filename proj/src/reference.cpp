#include "braess/reference.hpp"

namespace braess {

Trajectory run_simulation_reference(const SimConfig& config) {
    config.validate();
    const int n = config.spec.n;

    std::vector<Rng> streams;
    for (int j = 0; j < n; ++j) {
        const std::uint64_t s = config.agent_seeds.empty()
                                    ? derive_seed(config.seed, static_cast<std::uint64_t>(j))
                                    : config.agent_seeds[static_cast<std::size_t>(j)];
        streams.emplace_back(s);
    }
    std::vector<QTable> tables;
    for (int j = 0; j < n; ++j) tables.push_back(init_qtable(config.init, streams[j]));

    Trajectory traj;
    traj.per_agent_cost_sum.assign(static_cast<std::size_t>(n), 0.0);

    for (long t = 0; t < config.horizon; ++t) {
        ActionProfile profile;
        for (int j = 0; j < n; ++j)
            profile.push_back(select_action(tables[j], config.params[static_cast<std::size_t>(j)].epsilon,
                                            streams[j]));

        const std::vector<double> realized = profile_costs(profile, config.spec);
        const FlowCounts f = count_actions(profile);
        const auto costs = all_action_costs(f, n);

        double total = 0.0;
        for (int j = 0; j < n; ++j) {
            const auto& p = config.params[static_cast<std::size_t>(j)];
            update_self(tables[j], profile[static_cast<std::size_t>(j)],
                        realized[static_cast<std::size_t>(j)], p.alpha);
            if (p.beta > 0.0) {
                if (config.literal_monitoring)
                    update_monitored_literal(tables[j], profile[static_cast<std::size_t>(j)],
                                             realized[static_cast<std::size_t>(j)], p.beta);
                else
                    update_monitored(tables[j], profile[static_cast<std::size_t>(j)], costs, p.beta);
            }
            traj.per_agent_cost_sum[static_cast<std::size_t>(j)] += realized[static_cast<std::size_t>(j)];
            total += realized[static_cast<std::size_t>(j)];
        }
        traj.system_cost_series.push_back(total / static_cast<double>(n));
        if (config.record_counts) traj.counts.push_back(f);
        if (config.record_per_agent) traj.per_agent_costs.push_back(realized);
    }
    return traj;
}

}  // namespace braess
