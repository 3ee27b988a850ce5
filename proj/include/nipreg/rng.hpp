#pragma once

#include <cstdint>

namespace nipreg {

/// SplitMix64. All sampling in the verify/sweep paths goes through this
/// so that outputs are byte-identical across runs and platforms
/// (std::uniform_int_distribution is implementation-defined).
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). Lemire reduction, deterministic.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(u64()) * bound) >> 64);
    }

    /// True with exact probability p_num/p_den.
    bool chance(std::uint64_t p_num, std::uint64_t p_den) {
        return below(p_den) < p_num;
    }

    /// Derives an independent stream; used to give each sampled instance
    /// its own generator so iteration order never matters.
    Rng fork(std::uint64_t salt) {
        Rng seeder(state ^ (salt * 0x9e3779b97f4a7c15ULL) ^ 0xd1b54a32d192ed03ULL);
        return Rng(seeder.u64());
    }
};

}  // namespace nipreg
