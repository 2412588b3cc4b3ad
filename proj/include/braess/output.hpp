#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braess/metagame.hpp"
#include "braess/sim.hpp"

namespace braess {

// 9 significant digits, dot decimal separator
std::string fmt9(double v);

struct CorrelationEntry {
    std::string var_x;
    std::string var_y;
    std::optional<double> r;
    long n_samples;
};

// trajectory.csv: t,f_up,f_down,f_cross,C_t
std::string trajectory_csv(const Trajectory& traj);

// batch.csv: seed,alpha,beta,epsilon,mean_C,L,F,sigma_C,M,valid
// L is the empty field when M = 0; valid is 0 when the run is flagged suspect.
struct BatchCsvRow {
    std::uint64_t seed;
    double alpha;
    double beta;
    double epsilon;
    CycleReport report;
};
std::string batch_csv(std::span<const BatchCsvRow> rows);

// advantage.csv: param,pop_value,dev_value,rep,seed,D_j,C_mean
std::string advantage_csv(const std::string& param, std::span<const AdvantageSample> samples);

// correlation.csv: var_x,var_y,pearson_r,n_samples  (empty r on zero variance)
std::string correlation_csv(std::span<const CorrelationEntry> entries);

// Self-contained deterministic SVGs.
std::string timeseries_svg(std::span<const double> series, double mean_line,
                           const std::string& title);
std::string heatmap_svg(std::span<const double> x_values, std::span<const double> y_values,
                        std::span<const std::optional<double>> cells_row_major,
                        const std::string& x_label, const std::string& y_label,
                        const std::string& title, bool log_scale);
std::string correlation_matrix_svg(std::span<const std::string> x_names,
                                   std::span<const std::string> y_names,
                                   std::span<const std::optional<double>> cells_row_major,
                                   const std::string& title);

void write_file(const std::string& path, const std::string& bytes);

}  // namespace braess
