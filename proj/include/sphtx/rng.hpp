#ifndef SPHTX_RNG_HPP
#define SPHTX_RNG_HPP

#include <cmath>
#include <cstdint>

namespace sphtx {

/// splitmix64; used to spread seeds and to derive per-realization streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for realization `index` derived from the master seed. Realizations
/// get independent streams without sharing any RNG state, so they can run
/// on any thread in any order.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t s = master_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    return splitmix64(s);
}

/// xoshiro256++ (Blackman/Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256pp {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256pp(std::uint64_t seed = 1) {
        std::uint64_t sm = seed;
        for (auto& word : state_)
            word = splitmix64(sm);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }

    result_type operator()() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    double uniform01() {
        // 53 random bits into [0, 1)
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via the Marsaglia polar method (no trig, exact
    /// rejection), caching the spare deviate.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double factor = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * factor;
        have_spare_ = true;
        return u * factor;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace sphtx

#endif
