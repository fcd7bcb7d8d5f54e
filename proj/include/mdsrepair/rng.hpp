#pragma once

#include <cstdint>

namespace mdsrepair {

// splitmix64. Every piece of randomness in the library goes through this so
// that a single u64 seed reproduces runs bit-for-bit on any platform
// (std::uniform_int_distribution is implementation-defined, so we avoid it).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // n must be positive. The modulo bias is negligible for the small ranges
  // drawn here and keeps the draw sequence trivial to reproduce elsewhere.
  uint64_t below(uint64_t n) { return next() % n; }

 private:
  uint64_t state_;
};

}  // namespace mdsrepair
