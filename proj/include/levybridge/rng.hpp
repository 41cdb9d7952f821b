#pragma once

#include <cstdint>
#include <cmath>

namespace levy {

/// splitmix64 — used to expand seeds into independent substream states.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ with counter-based substream derivation: the state is seeded
/// from (master_seed, stream_index) through splitmix64, so path substreams are
/// reproducible independently of execution order.
class Xoshiro256pp {
  public:
    Xoshiro256pp(std::uint64_t master_seed, std::uint64_t stream_index) {
        std::uint64_t sm = master_seed ^ (0xa0761d6478bd642fULL * (stream_index + 1));
        for (auto& w : s_) w = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// uniform on (0, 1]  (never exactly 0, safe for logs and inverse CDFs)
    double uniform() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// exponential with the given rate
    double exponential(double rate) { return -std::log(uniform()) / rate; }

    /// uniform sign
    double sign() { return (next() & 1ULL) ? 1.0 : -1.0; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

}  // namespace levy
