#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "imlab/matrix.hpp"

namespace imlab::testing {

inline bool close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         max_abs_diff(a, b) <= tol * std::max(1.0, frobenius_norm(a));
}

// Plain O(n!) definition-level sum used as an oracle for fast algorithms.
template <class Weight>
Complex permutation_sum(const ComplexMatrix& a, Weight weight) {
  const std::size_t n = a.rows();
  std::vector<int> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  Complex total{};
  do {
    Complex term = weight(p);
    for (std::size_t i = 0; i < n; ++i) term *= a(i, static_cast<std::size_t>(p[i]));
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Parity by counting inversions.
inline int inversion_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

}  // namespace imlab::testing
