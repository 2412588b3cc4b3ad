#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace braess {

// The three routes of the Braess network.
enum class Action : int { Up = 0, Down = 1, Cross = 2 };

inline constexpr int kNumActions = 3;

struct GameSpec {
    int n;  // player count, n >= 2

    explicit GameSpec(int players) : n(players) {
        if (n < 2) throw std::invalid_argument("GameSpec: n must be >= 2");
    }
};

struct FlowCounts {
    int up = 0;
    int down = 0;
    int cross = 0;

    int total() const { return up + down + cross; }
    bool operator==(const FlowCounts&) const = default;
};

using ActionProfile = std::vector<Action>;

FlowCounts count_actions(std::span<const Action> profile);

// Travel cost of one route at the given flows:
//   up:    1 + (f_up + f_cross) / n
//   cross: (f_up + 2 f_cross + f_down) / n
//   down:  1 + (f_down + f_cross) / n
// Always in [1, 2].
double action_cost(Action a, const FlowCounts& f, int n);

// Costs of all three routes at once, indexed by Action.
std::array<double, 3> all_action_costs(const FlowCounts& f, int n);

std::vector<double> profile_costs(std::span<const Action> profile, const GameSpec& spec);

// Mean travel cost over the population; in [1.5, 2].
double system_cost(std::span<const Action> profile, const GameSpec& spec);

double system_cost(const FlowCounts& f, int n);

struct ReferencePoints {
    double nash_cost;            // everyone on cross
    double social_optimum_cost;  // best integer up/down split
    bool exact_even_split;       // false for odd n
};

ReferencePoints reference_points(const GameSpec& spec);

}  // namespace braess
