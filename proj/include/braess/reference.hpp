#pragma once

#include "braess/sim.hpp"

namespace braess {

// Straight-line reference implementation of the step loop, kept independent
// of run_simulation for testing and benchmarking. Must agree bit-exactly.
Trajectory run_simulation_reference(const SimConfig& config);

}  // namespace braess
