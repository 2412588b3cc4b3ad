// Compares the serial batch runner against the OpenMP one on the same
// workload and checks they produce identical results.
#include <chrono>
#include <cstdio>
#include <vector>

#include "braess/metrics.hpp"
#include "braess/sim.hpp"

using namespace braess;

namespace {

double run_once(const SimConfig& cfg, int reps, int jobs, std::vector<double>& means) {
    const auto t0 = std::chrono::steady_clock::now();
    auto rows = run_batch(cfg, reps, jobs, [](int, std::uint64_t, const Trajectory& traj) {
        return time_averaged_cost(traj);
    });
    const auto t1 = std::chrono::steady_clock::now();
    means = std::move(rows);
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 16;
    const long T = argc > 2 ? std::atol(argv[2]) : 20000;
    const int jobs = default_jobs();

    SimConfig cfg{GameSpec(100), T, {}, InitMode::Random, 42};
    cfg.params.assign(100, AgentParams(0.7, 0.0, 0.01));
    cfg.record_counts = false;

    std::vector<double> serial, parallel;
    const double ts = run_once(cfg, reps, 1, serial);
    const double tp = run_once(cfg, reps, jobs, parallel);

    std::printf("reps=%d T=%ld n=100\n", reps, T);
    std::printf("serial:   %.3f s\n", ts);
    std::printf("parallel: %.3f s  (jobs=%d, speedup %.2fx)\n", tp, jobs, ts / tp);
    if (serial != parallel) {
        std::printf("MISMATCH: serial and parallel batches differ\n");
        return 1;
    }
    std::printf("results identical\n");
    return 0;
}
