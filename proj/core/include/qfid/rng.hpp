#pragma once

#include <cstdint>
#include <random>

#include "qfid/complex_matrix.hpp"

namespace qfid {

/// Seeded source of uniform, Gaussian and complex Gaussian variates.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Normals come from Box-Muller implemented here, not from
/// std::normal_distribution, whose algorithm differs between standard
/// libraries. The remaining platform dependence is the last-ulp rounding of
/// log, sin and cos in the C math library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (mean 0, variance 1).
  double normal();
  /// Real and imaginary parts independent standard normals.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer; a bijection on 64-bit words with good avalanche.
std::uint64_t mix64(std::uint64_t x);

/// Independent stream seed for `stream` under a master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace qfid
