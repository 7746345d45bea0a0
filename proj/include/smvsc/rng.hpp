#pragma once

#include <cstdint>
#include <initializer_list>

namespace smvsc {

// splitmix64 step; used both as a stream generator and as a mixing function.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic seed fan-out: derives an independent sub-seed from a base
// seed and a path of tags (stage id, view index, restart index, ...).
// Parallel and serial execution see identical streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = base ^ 0xd1b54a32d192ed03ULL;
    for (std::uint64_t tag : path) {
        s ^= splitmix64(s) + tag;
        splitmix64(s);
    }
    return splitmix64(s);
}

}  // namespace smvsc
