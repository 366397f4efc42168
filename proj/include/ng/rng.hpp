#pragma once

#include <cstdint>
#include <random>

namespace ng {

// SplitMix64 (Steele/Lea/Flood splittable generator, Vigna's fixed-increment
// variant). Used only to derive per-run seeds from the master seed.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Seed of run `run_index` under `master`: the (run_index+1)-th output of
// SplitMix64 seeded with `master`. The state advances by a fixed increment,
// so the value is computable in O(1).
constexpr std::uint64_t run_seed(std::uint64_t master, std::uint64_t run_index) {
    SplitMix64 s(master + run_index * 0x9E3779B97F4A7C15ULL);
    return s.next();
}

// Deterministic random stream for one simulation run.
//
// The engine is std::mt19937_64, whose output sequence for a given seed is
// pinned by the C++ standard, so trajectories reproduce across compilers and
// standard libraries. All derived draws below are hand-rolled for the same
// reason: std::uniform_int_distribution and friends are implementation
// defined.
class RunRng {
public:
    explicit RunRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0,1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Uniform on [0, bound). Unbiased via masked rejection. Consumes at
    // least one engine draw, also for bound == 1.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        std::uint64_t v;
        do {
            v = gen_() & mask;
        } while (v >= bound);
        return v;
    }

    // Uniform word code point on [1, r].
    std::int32_t word(std::int32_t r) {
        return 1 + static_cast<std::int32_t>(below(static_cast<std::uint64_t>(r)));
    }

    bool coin(double p) { return next_unit() < p; }

private:
    std::mt19937_64 gen_;
};

} // namespace ng
