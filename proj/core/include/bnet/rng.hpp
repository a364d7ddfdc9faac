#pragma once

#include <cstdint>
#include <random>

#include "bnet/geometry.hpp"

namespace bnet {

// SplitMix64 finalizer; decorrelates nearby seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Seed of derived stream `index` under master seed `master`. This is the
// documented splitting rule: every trial/realization gets stream(master, i).
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + (index + 1) * 0x9E3779B97F4A7C15ull);
}

// Deterministic sampling front end over mt19937_64. All distributions are
// implemented here (not via std::*_distribution) so that a given seed
// produces the same stream on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(mix64(seed)) {}

    static Rng stream(std::uint64_t master, std::uint64_t index) {
        return Rng(stream_seed(master, index));
    }

    std::uint64_t bits() { return eng_(); }

    // Uniform on [0, 1).
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double prob) { return uniform01() < prob; }

    // Unit-mean exponential; strictly positive.
    double expUnit() { return -std::log1p(-uniform01()); }

    double exponential(double mean) { return mean * expUnit(); }

    // Exact Poisson sampling by counting unit-exponential arrivals.
    std::uint64_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        std::uint64_t k = 0;
        double acc = expUnit();
        while (acc <= mean) {
            ++k;
            acc += expUnit();
        }
        return k;
    }

    // Uniform point in the disk of radius `radius` around `center`.
    Point2 inDisk(Point2 center, double radius) {
        const double r = radius * std::sqrt(uniform01());
        const double phi = kTwoPi * uniform01();
        return {center.x + r * std::cos(phi), center.y + r * std::sin(phi)};
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace bnet
