#ifndef GROUPHIDE_RNG_HPP_
#define GROUPHIDE_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace grouphide {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for one sub-run: base XOR a hash of the run coordinates.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    for (std::uint64_t p : parts) h = splitmix64(h ^ p);
    return base ^ h;
}

}  // namespace grouphide

#endif  // GROUPHIDE_RNG_HPP_
