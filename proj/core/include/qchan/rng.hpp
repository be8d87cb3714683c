#pragma once

#include <cmath>
#include <cstdint>

namespace qchan {

// Seedable, platform-independent pseudo-random stream.
//
// The integer stream is splitmix64 (Steele, Lea, Flood 2014): a 64-bit
// counter advanced by the golden-gamma constant and finalized with two
// xor-shift-multiply rounds. Uniform doubles take the top 53 bits;
// Gaussian variates come from the Box-Muller transform. No global state:
// a generator is a value owned by the caller, so parallel batches with
// distinct seeds never interact.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n) { return next_u64() % n; }

    // One Box-Muller pair of independent standard normals.
    void gaussian_pair(double& g0, double& g1) {
        constexpr double two_pi = 6.283185307179586476925287;
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = two_pi * u2;
        g0 = r * std::cos(a);
        g1 = r * std::sin(a);
    }

    double gaussian() {
        double g0, g1;
        gaussian_pair(g0, g1);
        return g0;
    }

private:
    std::uint64_t state_;
};

}  // namespace qchan
