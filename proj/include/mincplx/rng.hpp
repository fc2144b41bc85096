#pragma once

// Portable, counter-based randomness.
//
// Every random decision in the library is a pure function of a 64-bit seed and
// a 64-bit counter, so results do not depend on iteration order, thread count
// or the standard library's distribution implementations.
//
//   mix64(z)                 SplitMix64 finalizer (a bijection on 64-bit words)
//   derive_trial_seed(s, i)  mix64(s ^ mix64((i + 1) * G)),   G = 0x9e3779b97f4a7c15
//   counter_bits(s, c)       mix64(mix64(s + G) ^ ((c + 1) * M)),  M = 0xd1b54a32d192ed03
//   counter_uniform(s, c)    (counter_bits(s, c) >> 11) * 2^-53, in [0, 1)
//
// A face of a random complex with combinatorial rank r is present iff
// counter_uniform(seed, r) < p. Reusing the seed while raising p only ever adds
// faces, which is what coupled sweeps rely on.

#include <cstdint>
#include <limits>

namespace mincplx::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
inline constexpr std::uint64_t kCounterMul = 0xd1b54a32d192ed03ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

/// For a fixed trial index this is a bijection in the base seed, and vice versa.
constexpr std::uint64_t derive_trial_seed(std::uint64_t base_seed, std::uint64_t trial_index) noexcept {
  return mix64(base_seed ^ mix64((trial_index + 1) * kGolden));
}

constexpr std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter) noexcept {
  return mix64(mix64(seed + kGolden) ^ ((counter + 1) * kCounterMul));
}

constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double counter_uniform(std::uint64_t seed, std::uint64_t counter) noexcept {
  return to_unit(counter_bits(seed, counter));
}

/// Sequential SplitMix64 engine; satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += kGolden;
    return mix64(state_);
  }

  constexpr double uniform() noexcept { return to_unit((*this)()); }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x = (*this)();
    while (x >= limit) x = (*this)();
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace mincplx::rng
