#pragma once

#include <cstdint>
#include <string>

#include "arclab/numeric.hpp"

namespace arclab {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based generator: the value at (seed, stream, counter) depends on
// nothing else, so draws can be taken in any order or in parallel.
class CounterRng {
public:
    constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL)))
    {
    }

    constexpr std::uint64_t at(std::uint64_t counter) const noexcept
    {
        return splitmix64(key_ ^ splitmix64(counter + 0x632be59bd9b4e019ULL));
    }

    // Child key for nested streams (trial -> retry -> ...).
    constexpr std::uint64_t derive(std::uint64_t stream) const noexcept { return at(~stream); }

private:
    std::uint64_t key_;
};

// Sequential view of a counter stream. Bounded draws use rejection sampling so
// results do not depend on the standard library's distribution implementations.
class StreamRng {
public:
    StreamRng(std::uint64_t seed, std::uint64_t stream) noexcept : rng_(seed, stream) {}

    std::uint64_t next() noexcept { return rng_.at(counter_++); }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    CounterRng rng_;
    std::uint64_t counter_ = 0;
};

// An inclusion probability represented exactly as numerator / 2^32, strictly
// inside (0, 1). Formula-derived probabilities are rounded to the nearest such
// value and the rounded value is what every report records.
class DyadicProbability {
public:
    static constexpr int kBits = 32;
    static constexpr std::uint64_t kDenominator = std::uint64_t{1} << kBits;

    explicit DyadicProbability(std::uint64_t numerator);

    static DyadicProbability from_real(const Real& p);
    static DyadicProbability from_double(double p) { return from_real(Real(p)); }
    // Accepts "num/den" (must be exactly dyadic with den <= 2^32) or a decimal.
    static DyadicProbability parse(const std::string& text);

    std::uint64_t numerator() const noexcept { return numerator_; }
    Rational exact() const { return Rational(BigInt(numerator_), BigInt(kDenominator)); }
    double value() const noexcept { return static_cast<double>(numerator_) / static_cast<double>(kDenominator); }

    // True with probability exactly p when `hash` is uniform on 64 bits.
    bool admits(std::uint64_t hash) const noexcept { return (hash >> (64 - kBits)) < numerator_; }

    friend bool operator==(const DyadicProbability&, const DyadicProbability&) = default;

private:
    std::uint64_t numerator_;
};

}  // namespace arclab
