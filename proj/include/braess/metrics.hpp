#pragma once

#include <optional>
#include <span>
#include <vector>

namespace braess {

// Cycle statistics of one system-cost series.
struct CycleReport {
    long crossings = 0;              // M: filtered downward mean-crossings
    double omega = 0.0;              // M / T
    std::optional<double> period;    // L = T / M, absent when M = 0
    double edgeworthiness = 0.0;     // F: fraction of non-negative deltas
    double sigma_delta = 0.0;        // population std of the delta series
    double sigma_c = 0.0;            // population std of the C_t series
    double mean_c = 0.0;
    bool suspect = false;            // mean far from mid-range, metrics unreliable
};

std::vector<double> delta_series(std::span<const double> c);

// M: count of t with C_t > mean, C_{t+1} < mean and |delta_t| > 3 sigma,
// sigma the population standard deviation of the delta series.
long count_cycles(std::span<const double> c);

std::optional<double> period(std::span<const double> c);

// F = |{delta_t >= 0}| / (T - 1); zeros count as increases.
double edgeworthiness(std::span<const double> c);

// population standard deviation, sqrt(mean(c^2) - mean(c)^2) clamped at 0
double dispersion(std::span<const double> c);

std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

// true when the mean lies outside the central band
// [min + band*range, max - band*range]; degenerate range is flagged too.
bool validity_diagnostic(std::span<const double> c, double band_fraction = 0.25);

// All of the above in one pass over the series; burn_in_fraction drops the
// leading fraction of the series before measuring (default: full series).
CycleReport analyze_series(std::span<const double> c, double band_fraction = 0.25,
                           double burn_in_fraction = 0.0);

}  // namespace braess
