#pragma once

#include <cstdint>
#include <random>

namespace obc::rng {

// splitmix64 finalizer. Used to whiten raw seeds and to derive
// per-substream seeds, so adjacent integer seeds do not produce
// correlated mt19937_64 streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for substream `index` of a master seed. Distinct indices give
// independent-looking streams; the mapping is pure, so a run is
// reproducible from (master, index) alone.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

// Every sampler in this library draws from this engine type.
using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) {
    return Engine(splitmix64(seed));
}

}  // namespace obc::rng
