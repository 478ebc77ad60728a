#pragma once

#include <cstdint>

namespace smatrix {

// Counter-based generator built on the splitmix64 finalizer. A draw is a
// pure function of (seed, stream, counter), so multi-start sampling is
// reproducible no matter how starts are scheduled across threads.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    // Uniform in [0, 1) with 53 random bits.
    double next_unit();

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace smatrix
