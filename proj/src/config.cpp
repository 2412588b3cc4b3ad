#include "braess/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace braess {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    throw ConfigError(name + ":" + std::to_string(line) + ": " + msg);
}

std::vector<double> parse_number_list(const std::string& v, const std::string& name, int line) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) fail(name, line, "empty entry in list");
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(name, line, "not a number: '" + item + "'");
        }
    }
    if (out.empty()) fail(name, line, "empty list");
    return out;
}

std::vector<std::string> parse_string_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void check_unit_interval(const std::vector<double>& v, const std::string& key) {
    for (double x : v)
        if (x < 0.0 || x > 1.0)
            throw ConfigError("config: " + key + " value outside [0,1]");
}

void check_strictly_increasing(const std::vector<double>& v, const std::string& key) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1])
            throw ConfigError("config: " + key + " grid must be strictly increasing");
}

std::string join(const std::vector<double>& v) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    return os.str();
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text, const std::string& name) {
    ExperimentConfig cfg;
    cfg.alpha.clear();

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    bool any_content = false;

    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        any_content = true;

        if (s.front() == '[') {
            if (s.back() != ']') fail(name, line, "unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section != "game" && section != "run" && section != "params" &&
                section != "sweep" && section != "output")
                fail(name, line, "unknown section [" + section + "]");
            continue;
        }

        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(name, line, "expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty()) fail(name, line, "expected 'key = value'");

        try {
            if (section == "game") {
                if (key == "n") cfg.n = std::stoi(value);
                else fail(name, line, "unknown key '" + key + "' in [game]");
            } else if (section == "run") {
                if (key == "T") cfg.horizon = std::stol(value);
                else if (key == "reps") cfg.reps = std::stoi(value);
                else if (key == "master_seed") cfg.master_seed = std::stoull(value);
                else if (key == "init") {
                    if (value == "random") cfg.init = InitMode::Random;
                    else if (value == "nash-eq") cfg.init = InitMode::NashEq;
                    else fail(name, line, "init must be 'random' or 'nash-eq'");
                } else fail(name, line, "unknown key '" + key + "' in [run]");
            } else if (section == "params") {
                if (key == "alpha") cfg.alpha = parse_number_list(value, name, line);
                else if (key == "beta") cfg.beta = parse_number_list(value, name, line);
                else if (key == "epsilon") cfg.epsilon = parse_number_list(value, name, line);
                else fail(name, line, "unknown key '" + key + "' in [params]");
            } else if (section == "sweep") {
                if (key == "kind") {
                    if (value == "homogeneous") cfg.sweep.kind = ExperimentConfig::SweepKind::Homogeneous;
                    else if (value == "deviant") cfg.sweep.kind = ExperimentConfig::SweepKind::Deviant;
                    else if (value == "heterogeneous-alpha")
                        cfg.sweep.kind = ExperimentConfig::SweepKind::HeterogeneousAlpha;
                    else fail(name, line, "unknown sweep kind '" + value + "'");
                } else if (key == "parameter") {
                    if (value == "alpha") cfg.sweep.parameter = MetaParam::Alpha;
                    else if (value == "epsilon") cfg.sweep.parameter = MetaParam::Epsilon;
                    else if (value == "beta") cfg.sweep.parameter = MetaParam::Beta;
                    else fail(name, line, "unknown sweep parameter '" + value + "'");
                } else if (key == "grid") cfg.sweep.grid = parse_number_list(value, name, line);
                else if (key == "grid2") cfg.sweep.grid2 = parse_number_list(value, name, line);
                else if (key == "population_grid")
                    cfg.sweep.population_grid = parse_number_list(value, name, line);
                else if (key == "deviant_grid")
                    cfg.sweep.deviant_grid = parse_number_list(value, name, line);
                else if (key == "half_widths")
                    cfg.sweep.half_widths = parse_number_list(value, name, line);
                else fail(name, line, "unknown key '" + key + "' in [sweep]");
            } else if (section == "output") {
                if (key == "dir") cfg.output.dir = value;
                else if (key == "plots") cfg.output.plots = parse_string_list(value);
                else fail(name, line, "unknown key '" + key + "' in [output]");
            } else {
                fail(name, line, "key outside any section");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            fail(name, line, "bad value '" + value + "' for key '" + key + "'");
        }
    }

    if (!any_content) throw ConfigError(name + ": empty config");
    if (cfg.alpha.empty()) throw ConfigError(name + ": [params] alpha is required");
    if (cfg.n < 2) throw ConfigError(name + ": n must be >= 2");
    if (cfg.horizon < 1) throw ConfigError(name + ": T must be >= 1");
    if (cfg.reps < 1) throw ConfigError(name + ": reps must be >= 1");

    check_unit_interval(cfg.alpha, "alpha");
    check_unit_interval(cfg.beta, "beta");
    check_unit_interval(cfg.epsilon, "epsilon");
    for (const auto* v : {&cfg.alpha, &cfg.beta, &cfg.epsilon}) {
        if (v->size() != 1 && static_cast<int>(v->size()) != cfg.n)
            throw ConfigError(name + ": param list must be scalar or length n");
    }
    // pairwise beta <= alpha across the expanded population
    for (int j = 0; j < cfg.n; ++j) {
        if (cfg.param_at(static_cast<std::size_t>(j), cfg.beta) >
            cfg.param_at(static_cast<std::size_t>(j), cfg.alpha))
            throw ConfigError(name + ": beta > alpha for agent " + std::to_string(j) +
                              " (keys: beta, alpha)");
    }
    check_unit_interval(cfg.sweep.grid, "sweep.grid");
    check_unit_interval(cfg.sweep.grid2, "sweep.grid2");
    check_unit_interval(cfg.sweep.population_grid, "sweep.population_grid");
    check_unit_interval(cfg.sweep.deviant_grid, "sweep.deviant_grid");
    check_strictly_increasing(cfg.sweep.grid, "sweep.grid");
    check_strictly_increasing(cfg.sweep.grid2, "sweep.grid2");
    check_strictly_increasing(cfg.sweep.population_grid, "sweep.population_grid");
    check_strictly_increasing(cfg.sweep.deviant_grid, "sweep.deviant_grid");
    check_strictly_increasing(cfg.sweep.half_widths, "sweep.half_widths");
    for (double w : cfg.sweep.half_widths)
        if (w < 0.0 || w > 0.5) throw ConfigError(name + ": half_widths outside [0,0.5]");

    return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

double ExperimentConfig::param_at(std::size_t agent, const std::vector<double>& v) const {
    return v.size() == 1 ? v[0] : v[agent];
}

SimConfig ExperimentConfig::to_sim_config() const {
    SimConfig sc{GameSpec(n), horizon, {}, init, master_seed};
    for (int j = 0; j < n; ++j) {
        const auto ja = static_cast<std::size_t>(j);
        sc.params.emplace_back(param_at(ja, alpha), param_at(ja, beta), param_at(ja, epsilon));
    }
    sc.validate();
    return sc;
}

std::string emit_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os.precision(17);
    os << "[game]\nn = " << cfg.n << "\n\n";
    os << "[run]\nT = " << cfg.horizon << "\nreps = " << cfg.reps
       << "\nmaster_seed = " << cfg.master_seed
       << "\ninit = " << (cfg.init == InitMode::Random ? "random" : "nash-eq") << "\n\n";
    os << "[params]\nalpha = " << join(cfg.alpha) << "\nbeta = " << join(cfg.beta)
       << "\nepsilon = " << join(cfg.epsilon) << "\n";
    if (cfg.sweep.kind != ExperimentConfig::SweepKind::None) {
        os << "\n[sweep]\nkind = ";
        switch (cfg.sweep.kind) {
            case ExperimentConfig::SweepKind::Homogeneous: os << "homogeneous"; break;
            case ExperimentConfig::SweepKind::Deviant: os << "deviant"; break;
            case ExperimentConfig::SweepKind::HeterogeneousAlpha: os << "heterogeneous-alpha"; break;
            case ExperimentConfig::SweepKind::None: break;
        }
        os << "\nparameter = " << meta_param_name(cfg.sweep.parameter) << "\n";
        if (!cfg.sweep.grid.empty()) os << "grid = " << join(cfg.sweep.grid) << "\n";
        if (!cfg.sweep.grid2.empty()) os << "grid2 = " << join(cfg.sweep.grid2) << "\n";
        if (!cfg.sweep.population_grid.empty())
            os << "population_grid = " << join(cfg.sweep.population_grid) << "\n";
        if (!cfg.sweep.deviant_grid.empty())
            os << "deviant_grid = " << join(cfg.sweep.deviant_grid) << "\n";
        if (!cfg.sweep.half_widths.empty())
            os << "half_widths = " << join(cfg.sweep.half_widths) << "\n";
    }
    os << "\n[output]\ndir = " << cfg.output.dir << "\n";
    if (!cfg.output.plots.empty()) {
        os << "plots = ";
        for (std::size_t i = 0; i < cfg.output.plots.size(); ++i) {
            if (i) os << ", ";
            os << cfg.output.plots[i];
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace braess
