#include "braess/game.hpp"

#include <limits>

namespace braess {

FlowCounts count_actions(std::span<const Action> profile) {
    FlowCounts f;
    for (Action a : profile) {
        switch (a) {
            case Action::Up: ++f.up; break;
            case Action::Down: ++f.down; break;
            case Action::Cross: ++f.cross; break;
        }
    }
    return f;
}

double action_cost(Action a, const FlowCounts& f, int n) {
    const double nn = static_cast<double>(n);
    switch (a) {
        case Action::Up:
            return 1.0 + static_cast<double>(f.up + f.cross) / nn;
        case Action::Cross:
            return static_cast<double>(f.up + 2 * f.cross + f.down) / nn;
        case Action::Down:
            return 1.0 + static_cast<double>(f.down + f.cross) / nn;
    }
    return std::numeric_limits<double>::quiet_NaN();  // unreachable
}

std::array<double, 3> all_action_costs(const FlowCounts& f, int n) {
    return {action_cost(Action::Up, f, n), action_cost(Action::Down, f, n),
            action_cost(Action::Cross, f, n)};
}

std::vector<double> profile_costs(std::span<const Action> profile, const GameSpec& spec) {
    const FlowCounts f = count_actions(profile);
    const auto costs = all_action_costs(f, spec.n);
    std::vector<double> out;
    out.reserve(profile.size());
    for (Action a : profile) out.push_back(costs[static_cast<int>(a)]);
    return out;
}

double system_cost(const FlowCounts& f, int n) {
    const auto costs = all_action_costs(f, n);
    return (f.up * costs[0] + f.down * costs[1] + f.cross * costs[2]) / static_cast<double>(n);
}

double system_cost(std::span<const Action> profile, const GameSpec& spec) {
    return system_cost(count_actions(profile), spec.n);
}

ReferencePoints reference_points(const GameSpec& spec) {
    const int n = spec.n;
    // best integer split, scanned exhaustively over all (up, down, cross)
    double best = std::numeric_limits<double>::infinity();
    for (int up = 0; up <= n; ++up) {
        for (int down = 0; down + up <= n; ++down) {
            FlowCounts f{up, down, n - up - down};
            best = std::min(best, system_cost(f, n));
        }
    }
    return {2.0, best, n % 2 == 0};
}

}  // namespace braess
