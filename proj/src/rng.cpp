#include "smatrix/rng.hpp"

namespace smatrix {

namespace {

// splitmix64 finalizer: a bijective mix with good avalanche behavior.
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix(mix(seed) ^ mix(stream ^ 0xa5a5a5a5a5a5a5a5ULL))) {}

std::uint64_t CounterRng::next_u64() {
    return mix(key_ ^ mix(counter_++));
}

double CounterRng::next_unit() {
    // Top 53 bits scaled by 2^-53: exact doubles, identical on every platform.
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace smatrix
