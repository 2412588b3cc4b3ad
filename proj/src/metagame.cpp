#include "braess/metagame.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace braess {

const char* meta_param_name(MetaParam p) {
    switch (p) {
        case MetaParam::Alpha: return "alpha";
        case MetaParam::Epsilon: return "epsilon";
        case MetaParam::Beta: return "beta";
    }
    return "?";
}

void MetaGameSpec::validate() const {
    if (population_grid.empty() || deviant_grid.empty())
        throw std::invalid_argument("MetaGameSpec: empty grid");
    if (reps < 1) throw std::invalid_argument("MetaGameSpec: reps must be >= 1");
    for (double v : population_grid)
        if (v < 0.0 || v > 1.0) throw std::invalid_argument("MetaGameSpec: grid value outside [0,1]");
    for (double v : deviant_grid)
        if (v < 0.0 || v > 1.0) throw std::invalid_argument("MetaGameSpec: grid value outside [0,1]");
}

double advantage(const Trajectory& traj, int j) {
    return agent_time_averaged_cost(traj, j) - time_averaged_cost(traj);
}

std::vector<AdvantageCell> aggregate_cells(const std::vector<AdvantageSample>& samples) {
    std::vector<AdvantageCell> cells;
    std::map<std::pair<double, double>, std::size_t> index;
    std::vector<std::vector<double>> ds;
    for (const auto& s : samples) {
        const auto key = std::make_pair(s.pop_value, s.dev_value);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, cells.size());
            cells.push_back({s.pop_value, s.dev_value, 0.0, 0.0, 0.0, 0});
            ds.emplace_back();
            it = index.find(key);
        }
        auto& cell = cells[it->second];
        cell.c_mean += s.c_mean;
        ++cell.reps;
        ds[it->second].push_back(s.d);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto& cell = cells[i];
        const auto& v = ds[i];
        double m = 0.0;
        for (double d : v) m += d;
        m /= static_cast<double>(v.size());
        double s2 = 0.0;
        for (double d : v) s2 += (d - m) * (d - m);
        cell.d_mean = m;
        cell.d_stderr = v.size() > 1 ? std::sqrt(s2 / static_cast<double>(v.size() - 1)) /
                                           std::sqrt(static_cast<double>(v.size()))
                                     : 0.0;
        cell.c_mean /= static_cast<double>(cell.reps);
    }
    return cells;
}

namespace {

AgentParams with_value(const AgentParams& base, MetaParam param, double v) {
    switch (param) {
        case MetaParam::Alpha:
            // keep beta feasible under the new alpha
            return AgentParams(v, std::min(base.beta, v), base.epsilon);
        case MetaParam::Epsilon:
            return AgentParams(base.alpha, base.beta, v);
        case MetaParam::Beta:
            if (v > base.alpha)
                throw std::invalid_argument("sweep: beta value exceeds alpha");
            return AgentParams(base.alpha, v, base.epsilon);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::vector<HomogeneousRow> sweep_homogeneous(MetaParam param, const std::vector<double>& grid,
                                              const SimConfig& base, int reps, int jobs) {
    std::vector<HomogeneousRow> rows;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        SimConfig c = base;
        const AgentParams p = with_value(base.params.at(0), param, grid[i]);
        c.params.assign(static_cast<std::size_t>(c.spec.n), p);
        c.seed = derive_seed(base.seed, i);
        auto batch = run_batch(c, reps, jobs,
                               [&](int rep, std::uint64_t seed, const Trajectory& traj) {
                                   return HomogeneousRow{grid[i], rep, seed,
                                                         analyze_series(traj.system_cost_series)};
                               });
        rows.insert(rows.end(), batch.begin(), batch.end());
    }
    return rows;
}

std::vector<HomogeneousRow2> sweep_homogeneous_alpha_beta(const std::vector<double>& alpha_grid,
                                                          const std::vector<double>& beta_grid,
                                                          const SimConfig& base, int reps,
                                                          int jobs) {
    std::vector<HomogeneousRow2> rows;
    std::size_t cell = 0;
    for (double a : alpha_grid) {
        for (double b : beta_grid) {
            if (b > a) continue;  // only the feasible half-plane
            SimConfig c = base;
            const AgentParams p(a, b, base.params.at(0).epsilon);
            c.params.assign(static_cast<std::size_t>(c.spec.n), p);
            c.seed = derive_seed(base.seed, cell++);
            auto batch = run_batch(c, reps, jobs,
                                   [&](int rep, std::uint64_t seed, const Trajectory& traj) {
                                       return HomogeneousRow2{
                                           a, b, rep, seed,
                                           analyze_series(traj.system_cost_series)};
                                   });
            rows.insert(rows.end(), batch.begin(), batch.end());
        }
    }
    return rows;
}

std::vector<AdvantageSample> sweep_deviant(const MetaGameSpec& spec, const SimConfig& base,
                                           int jobs) {
    spec.validate();
    std::vector<AdvantageSample> samples;
    for (std::size_t pi = 0; pi < spec.population_grid.size(); ++pi) {
        const double pop = spec.population_grid[pi];
        // seeds depend only on the population value index: common random
        // numbers across deviant values
        const std::uint64_t pop_seed = derive_seed(base.seed, pi);
        for (double dev : spec.deviant_grid) {
            SimConfig c = base;
            const AgentParams pop_params = with_value(base.params.at(0), spec.parameter, pop);
            const AgentParams dev_params = with_value(base.params.at(0), spec.parameter, dev);
            c.params.assign(static_cast<std::size_t>(c.spec.n), pop_params);
            c.params.at(0) = dev_params;
            c.seed = pop_seed;
            auto batch = run_batch(c, spec.reps, jobs,
                                   [&](int rep, std::uint64_t seed, const Trajectory& traj) {
                                       return AdvantageSample{pop, dev, rep, seed,
                                                              advantage(traj, 0),
                                                              time_averaged_cost(traj)};
                                   });
            samples.insert(samples.end(), batch.begin(), batch.end());
        }
    }
    return samples;
}

std::vector<AdvantageSample> sweep_heterogeneous_alpha(const std::vector<double>& half_widths,
                                                       const std::vector<double>& deviant_grid,
                                                       const SimConfig& base, int reps, int jobs) {
    for (double w : half_widths)
        if (w < 0.0 || w > 0.5)
            throw std::invalid_argument("sweep_heterogeneous_alpha: half width outside [0,0.5]");

    struct Job {
        std::size_t wi;
        std::size_t di;
        int rep;
    };
    std::vector<Job> jobs_list;
    for (std::size_t wi = 0; wi < half_widths.size(); ++wi)
        for (std::size_t di = 0; di < deviant_grid.size(); ++di)
            for (int rep = 0; rep < reps; ++rep) jobs_list.push_back({wi, di, rep});

    std::vector<AdvantageSample> samples(jobs_list.size());
    const auto run_one = [&](std::size_t idx) {
        const Job& job = jobs_list[idx];
        const double w = half_widths[job.wi];
        const double dev = deviant_grid[job.di];
        const std::uint64_t seed =
            child_seed(derive_seed(base.seed, job.wi), static_cast<std::uint64_t>(job.rep));

        SimConfig c = base;
        c.seed = seed;
        const AgentParams tmpl = base.params.at(0);
        c.params.clear();
        c.params.push_back(with_value(tmpl, MetaParam::Alpha, dev));
        // population alphas come from a dedicated stream so the agents' own
        // streams are untouched by the draws
        Rng pop_rng(derive_seed(seed, 0x706f70ULL));
        for (int j = 1; j < c.spec.n; ++j) {
            const double a = pop_rng.uniform(0.5 - w, 0.5 + w);
            c.params.push_back(with_value(tmpl, MetaParam::Alpha, a));
        }
        const Trajectory traj = run_simulation(c);
        samples[idx] =
            AdvantageSample{w, dev, job.rep, seed, advantage(traj, 0), time_averaged_cost(traj)};
    };

#if defined(_OPENMP)
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long long i = 0; i < static_cast<long long>(jobs_list.size()); ++i)
            run_one(static_cast<std::size_t>(i));
        return samples;
    }
#else
    (void)jobs;
#endif
    for (std::size_t i = 0; i < jobs_list.size(); ++i) run_one(i);
    return samples;
}

NashCertificate nash_certificate(const std::vector<AdvantageCell>& cells, double tolerance,
                                 double stderr_gate) {
    std::vector<double> pops;
    for (const auto& c : cells)
        if (std::find(pops.begin(), pops.end(), c.population_value) == pops.end())
            pops.push_back(c.population_value);

    NashCertificate cert;
    cert.no_symmetric_equilibrium = true;
    for (double pop : pops) {
        const AdvantageCell* best = nullptr;
        for (const auto& c : cells) {
            if (c.population_value != pop) continue;
            if (best == nullptr || c.d_mean < best->d_mean) best = &c;
        }
        const bool profitable = best->d_mean < -tolerance &&
                                best->d_mean + stderr_gate * best->d_stderr < 0.0;
        cert.rows.push_back(
            {pop, best->deviant_value, best->d_mean, best->d_stderr, profitable});
        if (!profitable) cert.no_symmetric_equilibrium = false;
    }
    return cert;
}

}  // namespace braess
