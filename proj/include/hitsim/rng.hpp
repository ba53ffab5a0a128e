#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace hitsim {

/// SplitMix64 step; used to expand a seed into generator state words.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ with one independent stream per path index.
///
/// The state is a pure function of (master_seed, path_index), so paths can
/// be generated in any order and on any number of threads with bit-identical
/// results.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t path_index) noexcept
        : master_seed_(master_seed), path_index_(path_index) {
        std::uint64_t sm = master_seed + path_index * 0x9e3779b97f4a7c15ULL;
        for (auto& word : state_) word = splitmix64(sm);
        // all-zero state is the one fixed point of xoshiro
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = std::rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) via multiply-shift.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t path_index() const noexcept { return path_index_; }

private:
    std::array<std::uint64_t, 4> state_;
    std::uint64_t master_seed_;
    std::uint64_t path_index_;
};

}  // namespace hitsim
