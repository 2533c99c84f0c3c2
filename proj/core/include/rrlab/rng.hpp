#pragma once

#include <cstdint>

namespace rrlab {

/// Deterministic 64-bit generator (splitmix64). Used instead of the
/// standard distributions so that seeded runs replay bit-identically on
/// every platform and standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, n), unbiased via rejection. n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  /// Stable per-subtask seed derivation, so parallel suite instances
  /// draw identical streams regardless of execution order.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x632be59bd9b4e019ULL + stream * 0x9e3779b97f4a7c15ULL));
    r.next();
    return r.next();
  }

private:
  std::uint64_t state_;
};

}  // namespace rrlab
