#pragma once

#include <vector>

#include "imlab/matrix.hpp"

namespace imlab {

/// Hermiticity is accepted when max_ij |a_ij - conj(a_ji)| is within this
/// multiple of (1 + ||A||_F).
inline constexpr double kHermitianTolerance = 1e-10;
/// Jacobi stops once the off-diagonal Frobenius mass falls below this
/// multiple of ||A||_F.
inline constexpr double kJacobiThreshold = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic complex Jacobi. The input is symmetrized as (A + A*)/2 after the
/// hermiticity check.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Outcome of a positive-semidefiniteness test. `holds` is exactly
/// `min_eigenvalue >= -tolerance_used`, where the tolerance already carries
/// the (1 + ||A||_F) scale.
struct LoewnerVerdict {
  bool holds;
  double min_eigenvalue;
  double tolerance_used;
};

LoewnerVerdict is_psd(const ComplexMatrix& a, double tol);
/// A >= B in the Loewner order, i.e. is_psd(A - B).
LoewnerVerdict loewner_ge(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace imlab
