#pragma once

#include <cstdint>
#include <string_view>

namespace wmn {

/// Deterministic 64-bit generator (splitmix64). Identical sequences on every
/// platform, unlike the standard-library distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, n). Rejection-sampled.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

  private:
    std::uint64_t state_;
};

/// Stable stream derivation: hashes a label into a root seed so that each
/// consumer (e.g. a CA scheme) draws from its own independent stream.
inline std::uint64_t derive_stream_seed(std::uint64_t root, std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    Rng mix(root ^ h);
    return mix.next();
}

}  // namespace wmn
