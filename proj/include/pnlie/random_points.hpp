#pragma once

#include <cstdint>
#include <random>

#include "pnlie/rational.hpp"

namespace pnlie {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Deterministic source of rational sample points. mt19937_64 output is
/// pinned by the standard, so identical seeds give identical streams on
/// every platform; no std distribution objects are used for the same reason.
class RationalSampler {
  public:
    explicit RationalSampler(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Integer in [lo, hi], inclusive.
    long bounded(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Numerator from {-10..10} \ {0}, denominator from {1,2,3}.
    Rational coordinate() {
        long num = bounded(-10, 9);
        if (num >= 0) ++num;  // skip zero
        const long den = bounded(1, 3);
        return Rational(num) / Rational(den);
    }

    /// Small rational, zero allowed; used for structure data.
    Rational small() {
        const long num = bounded(-3, 3);
        const long den = bounded(1, 2);
        return Rational(num) / Rational(den);
    }

    Vec point(std::size_t n) {
        Vec p(n);
        for (auto& x : p) x = coordinate();
        return p;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace pnlie
