#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rgnn {

// splitmix64 finalizer (Steele, Lea, Flood 2014). Used both as the stream
// generator and as the published seed-mixing function: derived seeds are
// mix64(seed, index), so every graph / assignment is independently
// reproducible from (dataset seed, index).
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline uint64_t mix64(uint64_t seed, uint64_t index) {
  return splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

// Deterministic 64-bit stream; identical sequences on every platform,
// unlike the std:: distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  // Unbiased bounded draw (Lemire's rejection method).
  uint32_t next_below(uint32_t bound) {
    uint64_t x = next_u64() & 0xFFFFFFFFULL;
    uint64_t m = x * bound;
    uint32_t l = static_cast<uint32_t>(m);
    if (l < bound) {
      uint32_t t = (0u - bound) % bound;
      while (l < t) {
        x = next_u64() & 0xFFFFFFFFULL;
        m = x * bound;
        l = static_cast<uint32_t>(m);
      }
    }
    return static_cast<uint32_t>(m >> 32);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [-a, a).
  double next_symmetric(double a) { return (2.0 * next_double() - 1.0) * a; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = next_below(static_cast<uint32_t>(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
};

}  // namespace rgnn
