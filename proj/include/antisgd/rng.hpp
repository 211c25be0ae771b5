#ifndef ANTISGD_RNG_HPP
#define ANTISGD_RNG_HPP

#include <cstdint>

namespace antisgd {

// SplitMix64 (Steele, Lea & Flood 2014). Chosen as the sampling generator
// because its output stream for a given seed is fixed by these few lines,
// independent of any standard-library distribution internals. Trace headers
// name it so runs can be reproduced elsewhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on {0, 1, ..., n-1} via rejection, so every value is exactly
  // equally likely.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static constexpr const char* name() { return "splitmix64"; }

 private:
  std::uint64_t state_;
};

}  // namespace antisgd

#endif
