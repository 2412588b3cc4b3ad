#include "braess/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace braess {

namespace {

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double population_std(std::span<const double> v) {
    const double m = mean_of(v);
    double s2 = 0.0;
    for (double x : v) s2 += (x - m) * (x - m);
    return std::sqrt(s2 / static_cast<double>(v.size()));
}

void require_len(std::span<const double> c, std::size_t k, const char* what) {
    if (c.size() < k) throw std::invalid_argument(std::string(what) + ": series too short");
}

}  // namespace

std::vector<double> delta_series(std::span<const double> c) {
    require_len(c, 2, "delta_series");
    std::vector<double> d;
    d.reserve(c.size() - 1);
    for (std::size_t t = 0; t + 1 < c.size(); ++t) d.push_back(c[t + 1] - c[t]);
    return d;
}

long count_cycles(std::span<const double> c) {
    require_len(c, 2, "count_cycles");
    const double mean = mean_of(c);
    const std::vector<double> d = delta_series(c);
    const double sigma = population_std(d);
    long m = 0;
    for (std::size_t t = 0; t + 1 < c.size(); ++t) {
        if (c[t] > mean && c[t + 1] < mean && std::fabs(d[t]) > 3.0 * sigma) ++m;
    }
    return m;
}

std::optional<double> period(std::span<const double> c) {
    const long m = count_cycles(c);
    if (m == 0) return std::nullopt;
    return static_cast<double>(c.size()) / static_cast<double>(m);
}

double edgeworthiness(std::span<const double> c) {
    const std::vector<double> d = delta_series(c);
    long up = 0;
    for (double x : d)
        if (x >= 0.0) ++up;
    return static_cast<double>(up) / static_cast<double>(d.size());
}

double dispersion(std::span<const double> c) {
    require_len(c, 1, "dispersion");
    return population_std(c);
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
    if (x.size() < 2) throw std::invalid_argument("pearson: need at least 2 samples");
    const double mx = mean_of(x);
    const double my = mean_of(y);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

bool validity_diagnostic(std::span<const double> c, double band_fraction) {
    require_len(c, 2, "validity_diagnostic");
    const auto [lo_it, hi_it] = std::minmax_element(c.begin(), c.end());
    const double lo = *lo_it, hi = *hi_it;
    const double range = hi - lo;
    if (range == 0.0) return true;  // degenerate series, flagged by convention
    const double mean = mean_of(c);
    return mean < lo + band_fraction * range || mean > hi - band_fraction * range;
}

CycleReport analyze_series(std::span<const double> c, double band_fraction,
                           double burn_in_fraction) {
    if (burn_in_fraction < 0.0 || burn_in_fraction >= 1.0)
        throw std::invalid_argument("analyze_series: burn_in_fraction outside [0,1)");
    const auto skip = static_cast<std::size_t>(burn_in_fraction * static_cast<double>(c.size()));
    std::span<const double> s = c.subspan(skip);
    require_len(s, 2, "analyze_series");

    CycleReport r;
    r.crossings = count_cycles(s);
    r.omega = static_cast<double>(r.crossings) / static_cast<double>(s.size());
    if (r.crossings > 0)
        r.period = static_cast<double>(s.size()) / static_cast<double>(r.crossings);
    r.edgeworthiness = edgeworthiness(s);
    r.sigma_delta = population_std(delta_series(s));
    r.sigma_c = population_std(s);
    r.mean_c = mean_of(s);
    r.suspect = validity_diagnostic(s, band_fraction);
    return r;
}

}  // namespace braess
