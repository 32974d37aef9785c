#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>
#include <string_view>

#include "sco/vec.hpp"

namespace sco {

// Splittable counter-based generator. The draw sequence is a pure function of
// (seed, stream, counter):
//
//   mix(z)   : SplitMix64 finalizer
//   key      = mix(seed ^ mix(stream))
//   draw(i)  = mix(key + i * 0x9E3779B97F4A7C15)
//
// Any language that reproduces mix() reproduces every stream bit-for-bit.
// Stream ids for a run are derived via stream_id(run_index, purpose_tag).
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
      h ^= static_cast<std::uint8_t>(c);
      h *= 0x100000001B3ull;
    }
    return h;
  }

  static constexpr std::uint64_t stream_id(std::uint64_t run_index, std::string_view purpose) {
    return mix(run_index ^ fnv1a(purpose));
  }

  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix(seed ^ mix(stream))) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGolden); }

  // [0, 1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Box-Muller; consumes two draws, returns one value.
  double normal() {
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Vec gaussian_vec(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = normal();
    return v;
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace sco
