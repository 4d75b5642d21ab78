#pragma once

#include <cstdint>

#include "lagsub/matrix.hpp"

namespace lagsub::testutil {

/// Deterministic RNG for tests.  splitmix64: identical streams on every
/// platform, unlike the distributions in <random>.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31U);
    }

    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long lo = -5, long hi = 5, long max_den = 3) {
        return Rational(range(lo, hi), range(1, max_den));
    }

    Vec vec(std::size_t n, long lo = -5, long hi = 5) {
        Vec v(n);
        for (auto& x : v) x = Rational(range(lo, hi));
        return v;
    }

private:
    std::uint64_t state_;
};

} // namespace lagsub::testutil
