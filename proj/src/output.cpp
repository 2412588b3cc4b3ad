#include "braess/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace braess {

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string trajectory_csv(const Trajectory& traj) {
    if (traj.counts.size() != traj.system_cost_series.size())
        throw std::invalid_argument("trajectory_csv: counts were not recorded");
    std::ostringstream os;
    os << "t,f_up,f_down,f_cross,C_t\n";
    for (std::size_t t = 0; t < traj.system_cost_series.size(); ++t) {
        const auto& f = traj.counts[t];
        os << (t + 1) << ',' << f.up << ',' << f.down << ',' << f.cross << ','
           << fmt9(traj.system_cost_series[t]) << '\n';
    }
    return os.str();
}

std::string batch_csv(std::span<const BatchCsvRow> rows) {
    std::ostringstream os;
    os << "seed,alpha,beta,epsilon,mean_C,L,F,sigma_C,M,valid\n";
    for (const auto& r : rows) {
        os << r.seed << ',' << fmt9(r.alpha) << ',' << fmt9(r.beta) << ',' << fmt9(r.epsilon)
           << ',' << fmt9(r.report.mean_c) << ',';
        if (r.report.period) os << fmt9(*r.report.period);
        os << ',' << fmt9(r.report.edgeworthiness) << ',' << fmt9(r.report.sigma_c) << ','
           << r.report.crossings << ',' << (r.report.suspect ? 0 : 1) << '\n';
    }
    return os.str();
}

std::string advantage_csv(const std::string& param, std::span<const AdvantageSample> samples) {
    std::ostringstream os;
    os << "param,pop_value,dev_value,rep,seed,D_j,C_mean\n";
    for (const auto& s : samples) {
        os << param << ',' << fmt9(s.pop_value) << ',' << fmt9(s.dev_value) << ',' << s.rep << ','
           << s.seed << ',' << fmt9(s.d) << ',' << fmt9(s.c_mean) << '\n';
    }
    return os.str();
}

std::string correlation_csv(std::span<const CorrelationEntry> entries) {
    std::ostringstream os;
    os << "var_x,var_y,pearson_r,n_samples\n";
    for (const auto& e : entries) {
        os << e.var_x << ',' << e.var_y << ',';
        if (e.r) os << fmt9(*e.r);
        os << ',' << e.n_samples << '\n';
    }
    return os.str();
}

namespace {

std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// blue -> white -> red ramp over [0, 1]
std::string ramp_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    int r, g, b;
    if (t < 0.5) {
        const double u = t / 0.5;
        r = static_cast<int>(std::lround(40 + u * (255 - 40)));
        g = static_cast<int>(std::lround(70 + u * (255 - 70)));
        b = 255;
    } else {
        const double u = (t - 0.5) / 0.5;
        r = 255;
        g = static_cast<int>(std::lround(255 - u * (255 - 60)));
        b = static_cast<int>(std::lround(255 - u * (255 - 50)));
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

std::string timeseries_svg(std::span<const double> series, double mean_line,
                           const std::string& title) {
    if (series.empty()) throw std::invalid_argument("timeseries_svg: empty series");
    const int w = 900, h = 300, ml = 60, mr = 15, mt = 30, mb = 35;
    const double px = w - ml - mr, py = h - mt - mb;

    double lo = *std::min_element(series.begin(), series.end());
    double hi = *std::max_element(series.begin(), series.end());
    lo = std::min(lo, mean_line);
    hi = std::max(hi, mean_line);
    if (hi == lo) {
        hi += 0.5;
        lo -= 0.5;
    }
    const auto xpix = [&](std::size_t t) {
        return ml + px * static_cast<double>(t) / static_cast<double>(series.size() - 1);
    };
    const auto ypix = [&](double v) { return mt + py * (1.0 - (v - lo) / (hi - lo)); };

    // deterministic downsampling keeps the file size bounded
    const std::size_t stride = std::max<std::size_t>(1, series.size() / 2000);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << ml << "\" y=\"18\" font-family=\"monospace\" font-size=\"13\">" << title
       << "</text>\n";
    os << "<polyline fill=\"none\" stroke=\"#333333\" stroke-width=\"0.8\" points=\"";
    for (std::size_t t = 0; t < series.size(); t += stride)
        os << svg_num(xpix(t)) << ',' << svg_num(ypix(series[t])) << ' ';
    if ((series.size() - 1) % stride != 0)
        os << svg_num(xpix(series.size() - 1)) << ',' << svg_num(ypix(series.back()));
    os << "\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << svg_num(ypix(mean_line)) << "\" x2=\"" << (w - mr)
       << "\" y2=\"" << svg_num(ypix(mean_line))
       << "\" stroke=\"#1f6fd0\" stroke-width=\"1\" stroke-dasharray=\"6 3\"/>\n";
    os << "<text x=\"" << (w - mr - 150) << "\" y=\"" << svg_num(ypix(mean_line) - 4)
       << "\" font-family=\"monospace\" font-size=\"11\" fill=\"#1f6fd0\">mean "
       << fmt9(mean_line) << "</text>\n";
    // axis frame and extreme labels
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << svg_num(px) << "\" height=\""
       << svg_num(py) << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"0.6\"/>\n";
    os << "<text x=\"5\" y=\"" << svg_num(ypix(hi) + 4)
       << "\" font-family=\"monospace\" font-size=\"11\">" << fmt9(hi) << "</text>\n";
    os << "<text x=\"5\" y=\"" << svg_num(ypix(lo) + 4)
       << "\" font-family=\"monospace\" font-size=\"11\">" << fmt9(lo) << "</text>\n";
    os << "<text x=\"" << ml << "\" y=\"" << (h - 10)
       << "\" font-family=\"monospace\" font-size=\"11\">t = 1 .. " << series.size()
       << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string heatmap_svg(std::span<const double> x_values, std::span<const double> y_values,
                        std::span<const std::optional<double>> cells_row_major,
                        const std::string& x_label, const std::string& y_label,
                        const std::string& title, bool log_scale) {
    const std::size_t nx = x_values.size(), ny = y_values.size();
    if (cells_row_major.size() != nx * ny)
        throw std::invalid_argument("heatmap_svg: cell count mismatch");

    const auto transform = [&](double v) -> std::optional<double> {
        if (log_scale) {
            if (v <= 0.0) return std::nullopt;
            return std::log10(v);
        }
        return v;
    };
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (const auto& c : cells_row_major) {
        if (!c) continue;
        const auto v = transform(*c);
        if (!v) continue;
        if (!any) {
            lo = hi = *v;
            any = true;
        } else {
            lo = std::min(lo, *v);
            hi = std::max(hi, *v);
        }
    }
    if (!any || hi == lo) hi = lo + 1.0;

    const int cell = 34, ml = 70, mt = 40, mb = 55, mr = 20;
    const int w = ml + static_cast<int>(nx) * cell + mr;
    const int h = mt + static_cast<int>(ny) * cell + mb;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << ml << "\" y=\"20\" font-family=\"monospace\" font-size=\"13\">" << title
       << (log_scale ? " (log10 scale)" : "") << "</text>\n";
    // y axis runs bottom-up so low values sit at the bottom row
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const auto& c = cells_row_major[iy * nx + ix];
            const auto v = c ? transform(*c) : std::nullopt;
            const std::string fill = v ? ramp_color((*v - lo) / (hi - lo)) : "#cccccc";
            const int x = ml + static_cast<int>(ix) * cell;
            const int y = mt + static_cast<int>(ny - 1 - iy) * cell;
            os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
               << cell << "\" fill=\"" << fill << "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
        }
    }
    for (std::size_t ix = 0; ix < nx; ++ix) {
        os << "<text x=\"" << (ml + static_cast<int>(ix) * cell + cell / 2) << "\" y=\""
           << (mt + static_cast<int>(ny) * cell + 15)
           << "\" font-family=\"monospace\" font-size=\"9\" text-anchor=\"middle\">"
           << fmt9(x_values[ix]) << "</text>\n";
    }
    for (std::size_t iy = 0; iy < ny; ++iy) {
        os << "<text x=\"" << (ml - 6) << "\" y=\""
           << (mt + static_cast<int>(ny - 1 - iy) * cell + cell / 2 + 3)
           << "\" font-family=\"monospace\" font-size=\"9\" text-anchor=\"end\">"
           << fmt9(y_values[iy]) << "</text>\n";
    }
    os << "<text x=\"" << (ml + static_cast<int>(nx) * cell / 2) << "\" y=\"" << (h - 12)
       << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" << x_label
       << "</text>\n";
    os << "<text x=\"14\" y=\"" << (mt + static_cast<int>(ny) * cell / 2)
       << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
       << (mt + static_cast<int>(ny) * cell / 2) << ")\">" << y_label << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string correlation_matrix_svg(std::span<const std::string> x_names,
                                   std::span<const std::string> y_names,
                                   std::span<const std::optional<double>> cells_row_major,
                                   const std::string& title) {
    const std::size_t nx = x_names.size(), ny = y_names.size();
    if (cells_row_major.size() != nx * ny)
        throw std::invalid_argument("correlation_matrix_svg: cell count mismatch");
    const int cell = 54, ml = 90, mt = 40, mb = 30, mr = 20;
    const int w = ml + static_cast<int>(nx) * cell + mr;
    const int h = mt + static_cast<int>(ny) * cell + mb;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << ml << "\" y=\"20\" font-family=\"monospace\" font-size=\"13\">" << title
       << "</text>\n";
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const auto& c = cells_row_major[iy * nx + ix];
            // map r in [-1,1] onto the ramp
            const std::string fill = c ? ramp_color((*c + 1.0) / 2.0) : "#cccccc";
            const int x = ml + static_cast<int>(ix) * cell;
            const int y = mt + static_cast<int>(iy) * cell;
            os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
               << cell << "\" fill=\"" << fill << "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
            os << "<text x=\"" << (x + cell / 2) << "\" y=\"" << (y + cell / 2 + 4)
               << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">"
               << (c ? svg_num(*c) : std::string("n/a")) << "</text>\n";
        }
    }
    for (std::size_t ix = 0; ix < nx; ++ix)
        os << "<text x=\"" << (ml + static_cast<int>(ix) * cell + cell / 2) << "\" y=\""
           << (mt - 6) << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">"
           << x_names[ix] << "</text>\n";
    for (std::size_t iy = 0; iy < ny; ++iy)
        os << "<text x=\"" << (ml - 8) << "\" y=\""
           << (mt + static_cast<int>(iy) * cell + cell / 2 + 4)
           << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" << y_names[iy]
           << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace braess
