#pragma once

#include <cstdint>

namespace taylorlab {

/**
 * Counter-based generator on the SplitMix64 mixing function.
 *
 * Output k of stream `seed` is mix(seed + (k + 1)·γ) with γ the 64-bit golden
 * ratio increment, i.e. exactly the k-th draw of a sequential SplitMix64
 * seeded with `seed`. Being a pure function of (seed, counter), any block of
 * the stream can be generated independently, so work split across threads
 * reproduces the single-threaded stream bit for bit.
 *
 * See https://prng.di.unimi.it for the constants.
 */
class CounterRng
{
  public:
    static constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ull;

    explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t bits(std::uint64_t counter) const noexcept
    {
        return mix(seed_ + (counter + 1) * golden_gamma);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform(std::uint64_t counter) const noexcept
    {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    /// An independent stream derived from this one.
    constexpr CounterRng split(std::uint64_t stream) const noexcept
    {
        return CounterRng(mix(seed_ ^ mix(stream + golden_gamma)));
    }

    constexpr std::uint64_t seed() const noexcept { return seed_; }

  private:
    std::uint64_t seed_;
};

/// Sequential view over a CounterRng stream.
class RngCursor
{
  public:
    explicit constexpr RngCursor(CounterRng rng, std::uint64_t start = 0) noexcept
        : rng_(rng), counter_(start)
    {
    }

    constexpr double uniform() noexcept { return rng_.uniform(counter_++); }
    constexpr double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    constexpr std::uint64_t counter() const noexcept { return counter_; }

  private:
    CounterRng rng_;
    std::uint64_t counter_;
};

}  // namespace taylorlab
