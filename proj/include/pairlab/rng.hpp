#ifndef PAIRLAB_RNG_HPP
#define PAIRLAB_RNG_HPP

#include <cstdint>

namespace pairlab {

// SplitMix64. Deterministic across platforms, unlike the standard library
// distributions; everything seeded in this lab goes through it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by masked rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~0ull >> __builtin_clzll((bound - 1) | 1);
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  // Uniform in [1, bound).
  std::uint64_t nonzero_below(std::uint64_t bound) { return 1 + below(bound - 1); }

 private:
  std::uint64_t state_;
};

// Stable derivation of stream seeds from a base seed, so independent
// consumers (table, inputs, per-session behaviors) never share a stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  Rng r(base ^ (salt * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
  return r.next();
}

}  // namespace pairlab

#endif  // PAIRLAB_RNG_HPP
