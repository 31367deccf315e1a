#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>

namespace loewner {

// SplitMix64 step; used to derive independent substream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// Deterministic generator. The engine (mt19937_64) is pinned by the standard
// and all value mappings are done by hand, so a given seed produces the same
// stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in (0, 1), endpoints excluded
  double uniform01_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // uniform integer in [0, n)
  std::int64_t uniform_int(std::int64_t n);

  double normal();
  std::complex<double> complex_normal();

  Rng fork(std::uint64_t salt) const { return Rng(mix_seed(seed_, salt)); }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

}  // namespace loewner
