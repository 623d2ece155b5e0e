#pragma once

#include <cstdint>
#include <stdexcept>

namespace qhop {

/// Deterministic 64-bit generator (splitmix64, Steele/Lea/Flood).
///
/// Used instead of <random> engines plus distributions because the standard
/// does not pin distribution output across library implementations; every
/// value produced here is bit-identical on any platform, which seeded runs
/// and frozen test instances rely on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 significant bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Uniform integer in [0, n) via 128-bit multiply-shift.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) {
      throw std::domain_error("SplitMix64::next_below: n must be positive");
    }
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  /// Generator name recorded in emitted run configs.
  static constexpr const char* name() { return "splitmix64"; }

 private:
  std::uint64_t state_;
};

}  // namespace qhop
