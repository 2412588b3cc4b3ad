#include "braess/harness.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

namespace braess {

namespace {

bool wants_plot(const ExperimentConfig& cfg, const std::string& kind) {
    return std::find(cfg.output.plots.begin(), cfg.output.plots.end(), kind) !=
           cfg.output.plots.end();
}

std::string path_join(const std::string& dir, const std::string& file) {
    return dir + "/" + file;
}

BatchCsvRow make_batch_row(std::uint64_t seed, double a, double b, double e,
                           const CycleReport& rep) {
    return BatchCsvRow{seed, a, b, e, rep};
}

// cells in row-major order with y (deviant) as rows, x (population) as columns
std::vector<std::optional<double>> cell_grid(const std::vector<AdvantageCell>& cells,
                                             const std::vector<double>& xs,
                                             const std::vector<double>& ys) {
    std::vector<std::optional<double>> grid(xs.size() * ys.size());
    for (const auto& c : cells) {
        const auto xi = std::find(xs.begin(), xs.end(), c.population_value) - xs.begin();
        const auto yi = std::find(ys.begin(), ys.end(), c.deviant_value) - ys.begin();
        grid[static_cast<std::size_t>(yi) * xs.size() + static_cast<std::size_t>(xi)] = c.d_mean;
    }
    return grid;
}

std::string certificate_csv(const NashCertificate& cert) {
    std::ostringstream os;
    os << "pop_value,best_deviant,best_D_mean,best_D_stderr,profitable\n";
    for (const auto& r : cert.rows) {
        os << fmt9(r.population_value) << ',' << fmt9(r.best_deviant) << ','
           << fmt9(r.best_d_mean) << ',' << fmt9(r.best_d_stderr) << ','
           << (r.profitable ? 1 : 0) << '\n';
    }
    return os.str();
}

}  // namespace

void cmd_simulate(const ExperimentConfig& cfg, const std::string& out_dir, int /*jobs*/) {
    SimConfig sim = cfg.to_sim_config();
    sim.record_counts = true;
    const Trajectory traj = run_simulation(sim);
    write_file(path_join(out_dir, "trajectory.csv"), trajectory_csv(traj));
    const double mean = time_averaged_cost(traj);
    write_file(path_join(out_dir, "timeseries.svg"),
               timeseries_svg(traj.system_cost_series, mean, "system cost C_t"));
}

void cmd_sweep(const ExperimentConfig& cfg, const std::string& out_dir, int jobs) {
    if (cfg.sweep.kind != ExperimentConfig::SweepKind::Homogeneous)
        throw ConfigError("sweep: config must set [sweep] kind = homogeneous");
    if (cfg.sweep.grid.empty()) throw ConfigError("sweep: [sweep] grid is required");
    SimConfig base = cfg.to_sim_config();
    base.record_counts = false;

    std::vector<BatchCsvRow> rows;
    if (!cfg.sweep.grid2.empty()) {
        if (cfg.sweep.parameter != MetaParam::Alpha)
            throw ConfigError("sweep: grid2 only applies to the (alpha, beta) double sweep");
        const auto res = sweep_homogeneous_alpha_beta(cfg.sweep.grid, cfg.sweep.grid2, base,
                                                      cfg.reps, jobs);
        for (const auto& r : res)
            rows.push_back(make_batch_row(r.seed, r.alpha, r.beta, cfg.epsilon.at(0), r.report));
        if (wants_plot(cfg, "log-period") || wants_plot(cfg, "heatmap")) {
            // mean over reps per feasible cell, deviant-style layout: beta rows
            std::map<std::pair<double, double>, std::pair<double, int>> acc;
            for (const auto& r : res) {
                if (!r.report.period) continue;
                auto& a = acc[{r.alpha, r.beta}];
                a.first += *r.report.period;
                ++a.second;
            }
            std::vector<std::optional<double>> grid(cfg.sweep.grid.size() *
                                                    cfg.sweep.grid2.size());
            for (std::size_t bi = 0; bi < cfg.sweep.grid2.size(); ++bi)
                for (std::size_t ai = 0; ai < cfg.sweep.grid.size(); ++ai) {
                    auto it = acc.find({cfg.sweep.grid[ai], cfg.sweep.grid2[bi]});
                    if (it != acc.end())
                        grid[bi * cfg.sweep.grid.size() + ai] =
                            it->second.first / it->second.second;
                }
            write_file(path_join(out_dir, "period_heatmap.svg"),
                       heatmap_svg(cfg.sweep.grid, cfg.sweep.grid2, grid, "alpha", "beta",
                                   "cycle period L", true));
        }
    } else {
        const auto res = sweep_homogeneous(cfg.sweep.parameter, cfg.sweep.grid, base, cfg.reps,
                                           jobs);
        const AgentParams base_p = base.params.at(0);
        for (const auto& r : res) {
            double a = base_p.alpha, b = base_p.beta, e = base_p.epsilon;
            switch (cfg.sweep.parameter) {
                case MetaParam::Alpha: a = r.value; b = std::min(b, a); break;
                case MetaParam::Beta: b = r.value; break;
                case MetaParam::Epsilon: e = r.value; break;
            }
            rows.push_back(make_batch_row(r.seed, a, b, e, r.report));
        }
    }
    write_file(path_join(out_dir, "batch.csv"), batch_csv(rows));
}

void cmd_metagame(const ExperimentConfig& cfg, const std::string& out_dir, int jobs) {
    SimConfig base = cfg.to_sim_config();
    base.record_counts = false;

    std::vector<AdvantageSample> samples;
    std::vector<double> xs;
    std::string param_name;
    std::string x_label;
    if (cfg.sweep.kind == ExperimentConfig::SweepKind::Deviant) {
        if (cfg.sweep.population_grid.empty() || cfg.sweep.deviant_grid.empty())
            throw ConfigError("metagame: population_grid and deviant_grid are required");
        MetaGameSpec spec{cfg.sweep.parameter, cfg.sweep.population_grid, cfg.sweep.deviant_grid,
                          cfg.reps};
        samples = sweep_deviant(spec, base, jobs);
        xs = cfg.sweep.population_grid;
        param_name = meta_param_name(cfg.sweep.parameter);
        x_label = "population " + param_name;
    } else if (cfg.sweep.kind == ExperimentConfig::SweepKind::HeterogeneousAlpha) {
        if (cfg.sweep.half_widths.empty() || cfg.sweep.deviant_grid.empty())
            throw ConfigError("metagame: half_widths and deviant_grid are required");
        samples = sweep_heterogeneous_alpha(cfg.sweep.half_widths, cfg.sweep.deviant_grid, base,
                                            cfg.reps, jobs);
        xs = cfg.sweep.half_widths;
        param_name = "alpha_hetero";
        x_label = "population alpha half-width";
    } else {
        throw ConfigError("metagame: config must set [sweep] kind = deviant or heterogeneous-alpha");
    }

    write_file(path_join(out_dir, "advantage.csv"), advantage_csv(param_name, samples));
    const auto cells = aggregate_cells(samples);
    write_file(path_join(out_dir, "heatmap.svg"),
               heatmap_svg(xs, cfg.sweep.deviant_grid, cell_grid(cells, xs, cfg.sweep.deviant_grid),
                           x_label, "deviant value", "advantage D_j", false));
    if (cfg.sweep.kind == ExperimentConfig::SweepKind::Deviant) {
        const auto cert = nash_certificate(cells);
        write_file(path_join(out_dir, "certificate.csv"), certificate_csv(cert));
        std::cout << (cert.no_symmetric_equilibrium
                          ? "no symmetric pure equilibrium on this grid\n"
                          : "symmetric pure equilibrium candidate exists on this grid\n");
    }
}

void cmd_correlate(const ExperimentConfig& cfg, const std::string& out_dir, int jobs) {
    if (cfg.sweep.kind != ExperimentConfig::SweepKind::Homogeneous)
        throw ConfigError("correlate: config must set [sweep] kind = homogeneous");
    if (cfg.sweep.grid.empty()) throw ConfigError("correlate: [sweep] grid is required");
    SimConfig base = cfg.to_sim_config();
    base.record_counts = false;

    // flat table: independent vars + per-run metrics, one row per run
    struct Row {
        double alpha, beta;
        CycleReport rep;
    };
    std::vector<Row> table;
    std::vector<BatchCsvRow> raw;
    std::vector<std::string> var_x;
    if (!cfg.sweep.grid2.empty()) {
        const auto res = sweep_homogeneous_alpha_beta(cfg.sweep.grid, cfg.sweep.grid2, base,
                                                      cfg.reps, jobs);
        for (const auto& r : res) {
            table.push_back({r.alpha, r.beta, r.report});
            raw.push_back(make_batch_row(r.seed, r.alpha, r.beta, cfg.epsilon.at(0), r.report));
        }
        var_x = {"alpha", "beta"};
    } else {
        const auto res =
            sweep_homogeneous(cfg.sweep.parameter, cfg.sweep.grid, base, cfg.reps, jobs);
        const AgentParams p = base.params.at(0);
        for (const auto& r : res) {
            const double a = cfg.sweep.parameter == MetaParam::Alpha ? r.value : p.alpha;
            const double b = cfg.sweep.parameter == MetaParam::Beta ? r.value : std::min(p.beta, a);
            table.push_back({a, b, r.report});
            raw.push_back(make_batch_row(r.seed, a, b,
                                         cfg.sweep.parameter == MetaParam::Epsilon ? r.value
                                                                                   : p.epsilon,
                                         r.report));
        }
        var_x = {meta_param_name(cfg.sweep.parameter)};
    }

    const std::vector<std::string> var_y = {"L", "F", "mean_C", "sigma_C"};
    const auto x_of = [&](const Row& r, const std::string& v) {
        return v == "beta" ? r.beta : r.alpha;
    };
    const auto y_of = [&](const Row& r, const std::string& v) -> std::optional<double> {
        if (v == "L") return r.rep.period;
        if (v == "F") return r.rep.edgeworthiness;
        if (v == "mean_C") return r.rep.mean_c;
        return r.rep.sigma_c;
    };

    std::vector<CorrelationEntry> entries;
    std::vector<std::optional<double>> matrix;
    for (const auto& yn : var_y) {
        for (const auto& xn : var_x) {
            std::vector<double> xv, yv;
            for (const auto& row : table) {
                const auto y = y_of(row, yn);
                if (!y) continue;  // runs without cycles drop out of L correlations
                xv.push_back(x_of(row, xn));
                yv.push_back(*y);
            }
            std::optional<double> r;
            if (xv.size() >= 2) r = pearson(xv, yv);
            entries.push_back({xn, yn, r, static_cast<long>(xv.size())});
            matrix.push_back(r);
        }
    }
    write_file(path_join(out_dir, "batch.csv"), batch_csv(raw));
    write_file(path_join(out_dir, "correlation.csv"), correlation_csv(entries));
    write_file(path_join(out_dir, "correlation.svg"),
               correlation_matrix_svg(var_x, var_y, matrix, "Pearson correlations"));
}

void cmd_metrics(const std::string& trajectory_csv_path, const std::string& out_dir) {
    std::ifstream in(trajectory_csv_path);
    if (!in) throw std::runtime_error("cannot open " + trajectory_csv_path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,", 0) != 0)
        throw std::runtime_error(trajectory_csv_path + ": not a trajectory.csv");
    std::vector<double> series;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto pos = line.find_last_of(',');
        if (pos == std::string::npos)
            throw std::runtime_error(trajectory_csv_path + ": malformed row");
        series.push_back(std::stod(line.substr(pos + 1)));
    }
    const CycleReport rep = analyze_series(series);

    std::ostringstream os;
    os << "mean_C,M,omega,L,F,sigma_delta,sigma_C,valid\n";
    os << fmt9(rep.mean_c) << ',' << rep.crossings << ',' << fmt9(rep.omega) << ',';
    if (rep.period) os << fmt9(*rep.period);
    os << ',' << fmt9(rep.edgeworthiness) << ',' << fmt9(rep.sigma_delta) << ','
       << fmt9(rep.sigma_c) << ',' << (rep.suspect ? 0 : 1) << '\n';
    write_file(path_join(out_dir, "metrics.csv"), os.str());
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Braess congestion game laboratory for continual Q-learners"};
    app.require_subcommand(1);

    std::string config_path;
    std::string input_path;
    std::string out_override;
    std::uint64_t seed_override = 0;
    bool has_seed = false;
    int jobs = default_jobs();

    const auto add_common = [&](CLI::App* sub, bool needs_config) {
        if (needs_config)
            sub->add_option("-c,--config", config_path, "experiment config file")->required();
        sub->add_option("--seed", seed_override, "override the config master seed")
            ->each([&](const std::string&) { has_seed = true; });
        sub->add_option("--jobs", jobs, "worker count (wall time only, never results)");
        sub->add_option("--out", out_override, "output directory override");
    };

    auto* simulate = app.add_subcommand("simulate", "run one simulation");
    auto* sweep = app.add_subcommand("sweep", "homogeneous parameter sweep");
    auto* metagame = app.add_subcommand("metagame", "deviant / heterogeneous advantage grids");
    auto* correlate = app.add_subcommand("correlate", "sweep and correlate params with metrics");
    auto* metrics = app.add_subcommand("metrics", "cycle metrics of a saved trajectory");
    for (auto* sub : {simulate, sweep, metagame, correlate}) add_common(sub, true);
    add_common(metrics, false);
    metrics->add_option("input", input_path, "trajectory.csv to analyze")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (metrics->parsed()) {
            cmd_metrics(input_path, out_override.empty() ? "out" : out_override);
            return 0;
        }
        ExperimentConfig cfg = parse_config(config_path);
        if (has_seed) cfg.master_seed = seed_override;
        const std::string out_dir = out_override.empty() ? cfg.output.dir : out_override;
        if (simulate->parsed()) cmd_simulate(cfg, out_dir, jobs);
        else if (sweep->parsed()) cmd_sweep(cfg, out_dir, jobs);
        else if (metagame->parsed()) cmd_metagame(cfg, out_dir, jobs);
        else if (correlate->parsed()) cmd_correlate(cfg, out_dir, jobs);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace braess
