#pragma once

#include <cstdint>

namespace singord {

// splitmix64: tiny, fully specified generator so that seeded runs are
// bit-identical across platforms and standard library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // uniform integer in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // nonzero integer in [-9,9], the bounded-height coefficient pool
    long small_nonzero() {
        long v = range(-9, 9);
        while (v == 0) v = range(-9, 9);
        return v;
    }

    // derive an independent stream, e.g. one per trial
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
        Rng r(seed ^ (0x6a09e667f3bcc909ULL + salt * 0x9e3779b97f4a7c15ULL));
        return r.next();
    }

private:
    std::uint64_t state_;
};

} // namespace singord
