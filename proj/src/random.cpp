#include "imlab/random.hpp"

#include <cmath>
#include <numbers>

namespace imlab {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng Rng::split(std::uint64_t stream) const { return Rng(mix_seed(seed_, stream)); }

double Rng::uniform() {
  // 53 random mantissa bits, shifted off zero.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

std::size_t Rng::uniform_index(std::size_t lo, std::size_t hi) {
  const std::uint64_t span = hi - lo + 1;
  return lo + static_cast<std::size_t>(engine_() % span);
}

ComplexMatrix random_complex_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) z = rng.complex_gaussian();
  return m;
}

ComplexMatrix random_real_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) z = rng.gaussian();
  return m;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix x = random_complex_matrix(n, n, rng);
  ComplexMatrix h = x + conjugate_transpose(x);
  h *= 0.5;
  return h;
}

ComplexMatrix random_psd(std::size_t n, Rng& rng) {
  const ComplexMatrix x = random_complex_matrix(n, n, rng);
  ComplexMatrix p = conjugate_transpose(x) * x;
  // Exact Hermitian symmetry; the product is only Hermitian to roundoff.
  for (std::size_t i = 0; i < n; ++i) {
    p(i, i) = p(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) p(j, i) = std::conj(p(i, j));
  }
  return p;
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix q = random_complex_matrix(n, n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    // Two passes of modified Gram-Schmidt keep the columns orthonormal to
    // machine precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex dot{};
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

}  // namespace imlab
