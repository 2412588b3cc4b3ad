#pragma once

#include <array>
#include <stdexcept>

#include "braess/game.hpp"
#include "braess/rng.hpp"

namespace braess {

// Per-action value estimates in cost units (lower is better).
struct QTable {
    std::array<double, 3> q{};

    double& operator[](Action a) { return q[static_cast<int>(a)]; }
    double operator[](Action a) const { return q[static_cast<int>(a)]; }
    bool operator==(const QTable&) const = default;
};

struct AgentParams {
    double alpha;    // self-learning rate
    double beta;     // monitoring rate, 0 <= beta <= alpha
    double epsilon;  // exploration rate

    AgentParams(double a, double b, double e) : alpha(a), beta(b), epsilon(e) {
        if (a < 0.0 || a > 1.0) throw std::invalid_argument("AgentParams: alpha outside [0,1]");
        if (e < 0.0 || e > 1.0) throw std::invalid_argument("AgentParams: epsilon outside [0,1]");
        if (b < 0.0 || b > a) throw std::invalid_argument("AgentParams: beta outside [0,alpha]");
    }
};

enum class InitMode { Random, NashEq };

// Random: three i.i.d. Uniform[1,2] draws in order up, down, cross.
// NashEq: (2.1, 2.1, 2.0), no rng consumption; greedy play starts at cross.
QTable init_qtable(InitMode mode, Rng& rng);

// epsilon-greedy over cost-valued q (greedy = argmin).
// Draw discipline, frozen for reproducibility: one exploration coin first;
// if exploring, one uniform action draw; if greedy with an exact tie, one
// tie-break draw; otherwise no further draw.
Action select_action(const QTable& q, double epsilon, Rng& rng);

// Q(a) <- Q(a) + alpha (r - Q(a))
void update_self(QTable& q, Action a, double cost, double alpha);

// Both non-taken entries move toward their own realized action cost at rate
// beta; the taken entry is untouched here.
void update_monitored(QTable& q, Action taken, const std::array<double, 3>& observed_costs,
                      double beta);

// Literal alternative kept as an ablation: every non-taken entry moves toward
// the taken action's reward instead of its own realized cost.
void update_monitored_literal(QTable& q, Action taken, double taken_cost, double beta);

}  // namespace braess
