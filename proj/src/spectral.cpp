#include "imlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "imlab/error.hpp"

namespace imlab {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

ComplexMatrix checked_symmetrization(const ComplexMatrix& a) {
  require_square(a, "hermitian eigensolver");
  const double norm = frobenius_norm(a);
  const double asym = hermitian_asymmetry(a);
  if (asym > kHermitianTolerance * (1.0 + norm)) {
    throw Error(ErrorCode::NotHermitian,
                "max |A - A*| = " + std::to_string(asym) + " exceeds tolerance");
  }
  ComplexMatrix h = a + conjugate_transpose(a);
  h *= 0.5;
  return h;
}

// Applies A <- U* A U and V <- V U for the unitary that acts as
// [[upp, upq], [uqp, uqq]] on coordinates (p, q).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, Complex upp,
            Complex upq, Complex uqp, Complex uqq) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& input) {
  ComplexMatrix a = checked_symmetrization(input);
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kJacobiThreshold * frobenius_norm(a);

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const Complex phase = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        rotate(a, v, p, q, c, s, -s * std::conj(phase), c * std::conj(phase));
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "Jacobi sweep limit " + std::to_string(kJacobiMaxSweeps) + " reached");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  return hermitian_eigen(a).values;
}

LoewnerVerdict is_psd(const ComplexMatrix& a, double tol) {
  const std::vector<double> values = hermitian_eigenvalues(a);
  const double scaled = tol * (1.0 + frobenius_norm(a));
  const double lowest = values.front();
  return {lowest >= -scaled, lowest, scaled};
}

LoewnerVerdict loewner_ge(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "loewner_ge operands differ in shape");
  }
  return is_psd(a - b, tol);
}

}  // namespace imlab
