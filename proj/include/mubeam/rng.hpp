#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace mubeam {

// Counter-based generator family "ctr64-v1", frozen for reproducibility.
// Output i of the stream keyed by `key` is mix64(key + i * GOLDEN), where
// mix64 is the SplitMix64 finalizer. Streams never carry hidden state, so
// sample j of a dataset can be produced independently of samples 0..j-1.
inline constexpr uint64_t kRngGolden = 0x9E3779B97F4A7C15ULL;

inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Derives an independent sub-stream key, e.g. per sample id or per epoch.
inline uint64_t derive_stream(uint64_t seed, uint64_t id) {
  return mix64(mix64(seed + kRngGolden) ^ (id * kRngGolden + 1));
}

class CounterRng {
 public:
  explicit CounterRng(uint64_t key) : key_(key) {}

  uint64_t next_u64() { return mix64(key_ + (++counter_) * kRngGolden); }

  // Uniform in (0, 1]; 53-bit mantissa, never exactly zero.
  double next_unit() {
    const uint64_t u = next_u64() >> 11;
    return (static_cast<double>(u) + 1.0) * 0x1p-53;
  }

  // Box-Muller pair, each N(0, 1).
  std::pair<double, double> next_gaussian_pair() {
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925287 * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    auto [z0, z1] = next_gaussian_pair();
    spare_ = z1;
    have_spare_ = true;
    return z0;
  }

  // Uniform integer in [0, n), n >= 1. Rejection keeps it unbiased.
  uint64_t next_below(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t u;
    do {
      u = next_u64();
    } while (u >= limit);
    return u % n;
  }

  uint64_t key() const { return key_; }
  uint64_t counter() const { return counter_; }
  void set_counter(uint64_t c) {
    counter_ = c;
    have_spare_ = false;
  }

 private:
  uint64_t key_ = 0;
  uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline constexpr const char* kGeneratorVersion = "ctr64-v1";

}  // namespace mubeam
