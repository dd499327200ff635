#pragma once

#include <cmath>
#include <cstdint>

namespace bondspan {

namespace detail {

inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

// Splittable counter-seeded generator (splitmix64). Monte Carlo code derives
// one independent stream per draw index from (seed, domain tag, index), so
// results do not depend on how draws are partitioned across threads.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    static SplitMix64 stream(uint64_t seed, uint64_t domain, uint64_t index) {
        uint64_t s = detail::mix64(seed ^ (0xd1342543de82ef95ULL * (domain + 1)));
        return SplitMix64(s ^ detail::mix64(index + 0x2545f4914f6cdd1dULL));
    }

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on the open interval (0, 1).
    double uniform01() { return ((next() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Inverse-CDF exponential draw, mean 1/rate.
    double exponential(double rate) { return -std::log(uniform01()) / rate; }

    // 10^U with U uniform on [log10(lo), log10(hi)].
    double log_uniform(double lo, double hi) {
        return std::pow(10.0, uniform(std::log10(lo), std::log10(hi)));
    }

private:
    uint64_t state_;
};

} // namespace bondspan
