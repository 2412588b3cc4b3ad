#include "braess/learner.hpp"

namespace braess {

QTable init_qtable(InitMode mode, Rng& rng) {
    QTable t;
    if (mode == InitMode::NashEq) {
        t[Action::Up] = 2.1;
        t[Action::Down] = 2.1;
        t[Action::Cross] = 2.0;
    } else {
        t[Action::Up] = rng.uniform(1.0, 2.0);
        t[Action::Down] = rng.uniform(1.0, 2.0);
        t[Action::Cross] = rng.uniform(1.0, 2.0);
    }
    return t;
}

Action select_action(const QTable& q, double epsilon, Rng& rng) {
    const double coin = rng.uniform01();
    if (coin < epsilon) return static_cast<Action>(rng.uniform_int(kNumActions));

    int best = 0;
    int ties = 1;
    for (int a = 1; a < kNumActions; ++a) {
        if (q.q[a] < q.q[best]) {
            best = a;
            ties = 1;
        } else if (q.q[a] == q.q[best]) {
            ++ties;
        }
    }
    if (ties > 1) {
        int pick = rng.uniform_int(ties);
        for (int a = 0; a < kNumActions; ++a) {
            if (q.q[a] == q.q[best] && pick-- == 0) return static_cast<Action>(a);
        }
    }
    return static_cast<Action>(best);
}

void update_self(QTable& q, Action a, double cost, double alpha) {
    q[a] += alpha * (cost - q[a]);
}

void update_monitored(QTable& q, Action taken, const std::array<double, 3>& observed_costs,
                      double beta) {
    for (int a = 0; a < kNumActions; ++a) {
        if (a == static_cast<int>(taken)) continue;
        q.q[a] += beta * (observed_costs[a] - q.q[a]);
    }
}

void update_monitored_literal(QTable& q, Action taken, double taken_cost, double beta) {
    for (int a = 0; a < kNumActions; ++a) {
        if (a == static_cast<int>(taken)) continue;
        q.q[a] += beta * (taken_cost - q.q[a]);
    }
}

}  // namespace braess
