#pragma once

#include <cmath>
#include <cstdint>

namespace retrofit {

/// Deterministic random stream with portable output: the generator is the
/// specified xoshiro-free splitmix64 core, and the uniform/normal transforms
/// are fixed here rather than delegated to implementation-defined library
/// distributions, so a seed reproduces the same doubles on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    /// Standard Gaussian via Box-Muller.
    double normal()
    {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Stable per-candidate seed: mixes the base seed with the outer iteration
/// and floor index so parallel candidate solves are reproducible regardless
/// of scheduling.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t iteration, std::uint64_t floor)
{
    Rng mixer(base ^ (iteration * 0x9E3779B97F4A7C15ull) ^ (floor * 0xD1B54A32D192ED03ull));
    return mixer.next_u64();
}

}  // namespace retrofit
