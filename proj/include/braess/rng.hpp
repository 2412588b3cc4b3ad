#pragma once

#include <cstdint>
#include <random>

namespace braess {

// splitmix64, used only for seed derivation
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t s = base ^ (0x5851f42d4c957f2dULL * (index + 1));
    return splitmix64(s);
}

// Deterministic random stream. All draws go through uniform01() so the
// number of engine calls per operation is fixed and countable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform double in [0, 1)
    double uniform01() {
        ++calls_;
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    // uniform integer in [0, k), exactly one draw
    int uniform_int(int k) {
        int v = static_cast<int>(uniform01() * k);
        return v < k ? v : k - 1;
    }

    std::uint64_t calls() const { return calls_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t calls_ = 0;
};

}  // namespace braess
