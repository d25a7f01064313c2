#pragma once

// Splittable random streams: a (seed, stream) pair is expanded through
// SplitMix64 into an independent xoshiro256++ state, so Monte Carlo runs are
// reproducible for any worker count - samples are partitioned by stream, not
// by thread.

#include <cmath>
#include <cstdint>

namespace qent {

struct RngConfig {
    std::uint64_t seed = 0;
    int streams = 64;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace detail

class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t mix = seed ^ (0xA3C59AC2ull + stream * 0x9E3779B97F4A7C15ull);
        for (auto& word : state_) {
            word = detail::splitmix64(mix);
            if (word == 0) word = 0x1ull;  // xoshiro state must not be all zero
        }
        has_spare_ = false;
        spare_ = 0.0;
    }

    std::uint64_t next_u64() {
        // xoshiro256++
        const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    /// uniform in (0, 1]
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// standard normal via Box-Muller, spare value cached
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

  private:
    std::uint64_t state_[4];
    bool has_spare_;
    double spare_;
};

}  // namespace qent
