#pragma once

#include <array>
#include <cstdint>

#include "necklace/errors.hpp"

namespace necklace {

// Deterministic randomness for the simulator, fixed across platforms.
//
// Generator family: xoshiro256** 1.0 (Blackman & Vigna), seeded through
// SplitMix64 (Steele, Lea & Flood) as its authors recommend. Substream
// rule: replicate r of master seed s takes words 4r..4r+3 of the
// SplitMix64 stream of s as its state, so substreams are pairwise
// disjoint and addressable in O(1) — any replicate range can be run on
// any worker and still reproduce bit-for-bit.

// Output with the given index of the SplitMix64 stream seeded with `seed`
// (the underlying state is a Weyl sequence, so random access is a single
// multiply).
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed) : Xoshiro256StarStar(seed, 0) {}

  // Replicate substream: state words 4*stream .. 4*stream+3 of SplitMix64.
  Xoshiro256StarStar(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t operator()();

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

 private:
  std::array<std::uint64_t, 4> state_;
};

// Uniform draw in [0, bound), unbiased: draws below 2^64 mod bound (the
// overrepresented low tail of the modulo map) are rejected and retried.
template <typename Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

template <typename Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw UsageError("uniform_below needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;  // == 2^64 mod bound
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw >= threshold) return draw % bound;
  }
}

}  // namespace necklace
