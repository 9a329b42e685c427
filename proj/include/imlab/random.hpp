#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "imlab/matrix.hpp"

namespace imlab {

/// Seeded sample stream. The engine is std::mt19937_64, whose output sequence
/// is fixed by the standard, and Gaussians come from Box-Muller on raw engine
/// bits, so streams are reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Independent child stream keyed by `stream`; splitting never advances
  /// the parent.
  Rng split(std::uint64_t stream) const;

  /// Uniform in the open interval (0, 1).
  double uniform();
  double gaussian();
  /// Complex Gaussian with independent standard normal real/imag parts.
  Complex complex_gaussian();
  std::uint64_t next_u64() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::size_t uniform_index(std::size_t lo, std::size_t hi);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// SplitMix64 finalizer, used to derive child seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

ComplexMatrix random_complex_matrix(std::size_t rows, std::size_t cols, Rng& rng);
ComplexMatrix random_real_matrix(std::size_t rows, std::size_t cols, Rng& rng);
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);
/// X*X with X an n x n complex Gaussian matrix.
ComplexMatrix random_psd(std::size_t n, Rng& rng);
/// Unitary Q from Gram-Schmidt QR of a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

}  // namespace imlab
