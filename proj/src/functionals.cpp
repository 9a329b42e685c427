#include "imlab/functionals.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include "imlab/combinatorics.hpp"
#include "imlab/error.hpp"
#include "imlab/spectral.hpp"

namespace imlab {

Complex hadamard_function(const ComplexMatrix& a) {
  require_square(a, "hadamard_function");
  Complex p = 1.0;
  for (std::size_t i = 0; i < a.rows(); ++i) p *= a(i, i);
  return p;
}

Complex permanent(const ComplexMatrix& a) {
  require_square(a, "permanent");
  const std::size_t n = a.rows();
  if (n > kMaxPermanentSize) {
    throw Error(ErrorCode::TooLarge, "permanent is limited to n <= 14");
  }
  // per(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij, S visited in
  // Gray-code order so each step adds or removes one column.
  std::vector<Complex> row_sums(n);
  Complex total{};
  std::uint32_t gray = 0;
  for (std::uint32_t k = 1; k < (1u << n); ++k) {
    const int column = std::countr_zero(k);
    gray ^= 1u << column;
    const bool added = (gray >> column) & 1u;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sums[i] += a(i, column);
      } else {
        row_sums[i] -= a(i, column);
      }
    }
    Complex product = 1.0;
    for (const auto& s : row_sums) product *= s;
    total += (std::popcount(gray) % 2 == 0) ? product : -product;
  }
  return n % 2 == 0 ? total : -total;
}

Complex immanant(const ComplexMatrix& a, const CharacterFunction& chi) {
  require_square(a, "immanant");
  const PermutationGroup& group = chi.group();
  if (group.degree() != a.rows()) {
    throw Error(ErrorCode::DegreeMismatch, "group degree " + std::to_string(group.degree()) +
                                               " vs matrix size " + std::to_string(a.rows()));
  }
  Complex total{};
  for (std::size_t k = 0; k < group.order(); ++k) {
    const Complex weight = chi(k);
    if (weight == Complex{}) continue;
    const Permutation& sigma = group.element(k);
    Complex product = 1.0;
    for (std::size_t i = 0; i < a.rows(); ++i) product *= a(i, static_cast<std::size_t>(sigma(i)));
    total += weight * product;
  }
  return total;
}

Complex immanant(const ComplexMatrix& a, const PermutationGroup& group,
                 const CharacterFunction& chi) {
  if (group.elements() != chi.group().elements()) {
    throw Error(ErrorCode::DegreeMismatch, "character is defined on a different group");
  }
  return immanant(a, chi);
}

Complex immanant_symmetric(const ComplexMatrix& a, const Partition& lambda) {
  require_square(a, "immanant");
  const int n = static_cast<int>(a.rows());
  if (!is_partition(lambda) || std::accumulate(lambda.begin(), lambda.end(), 0) != n) {
    throw Error(ErrorCode::DegreeMismatch, "partition must be a partition of the matrix size");
  }
  std::map<CycleType, double> weights;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  Complex total{};
  do {
    const Permutation sigma(images);
    const CycleType ct = cycle_type(sigma);
    auto it = weights.find(ct);
    if (it == weights.end()) {
      it = weights.emplace(ct, static_cast<double>(sn_character(lambda, ct.parts))).first;
    }
    if (it->second == 0.0) continue;
    Complex product = 1.0;
    for (int i = 0; i < n; ++i) product *= a(i, images[i]);
    total += it->second * product;
  } while (std::next_permutation(images.begin(), images.end()));
  return total;
}

namespace {

void check_index(int r, std::size_t n, bool bounded_by_n) {
  if (r < 1) throw Error(ErrorCode::IndexOutOfRange, "r must be at least 1");
  if (bounded_by_n && static_cast<std::size_t>(r) > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "r = " + std::to_string(r) + " exceeds matrix size " + std::to_string(n));
  }
}

}  // namespace

double spectral_symmetric(const ComplexMatrix& a, SpectralKind kind, int r) {
  require_square(a, "spectral_symmetric");
  check_index(r, a.rows(), kind == SpectralKind::Elementary);
  const std::vector<double> lambda = hermitian_eigenvalues(a);
  switch (kind) {
    case SpectralKind::PowerSum:
      return std::pow(std::accumulate(lambda.begin(), lambda.end(), 0.0), r);
    case SpectralKind::Elementary: {
      std::vector<double> e(r + 1, 0.0);
      e[0] = 1.0;
      for (double l : lambda)
        for (int k = r; k >= 1; --k) e[k] += l * e[k - 1];
      return e[r];
    }
    case SpectralKind::Complete: {
      std::vector<double> h(r + 1, 0.0);
      h[0] = 1.0;
      for (double l : lambda)
        for (int k = 1; k <= r; ++k) h[k] += l * h[k - 1];
      return h[r];
    }
  }
  return 0.0;
}

Complex elementary_symmetric(const ComplexMatrix& a, int r) {
  require_square(a, "elementary_symmetric");
  check_index(r, a.rows(), true);
  Complex total{};
  for (const auto& alpha : increasing_tuples(a.rows(), static_cast<std::size_t>(r))) {
    total += imlab::determinant(submatrix(a, alpha, alpha));
  }
  return total;
}

Complex complete_symmetric(const ComplexMatrix& a, int r) {
  require_square(a, "complete_symmetric");
  check_index(r, a.rows(), false);
  Complex total{};
  for (const auto& alpha : nondecreasing_tuples(a.rows(), static_cast<std::size_t>(r))) {
    total += imlab::permanent(submatrix(a, alpha, alpha)) /
             static_cast<double>(multiplicity_factorial(alpha));
  }
  return total;
}

Complex power_trace(const ComplexMatrix& a, int r) {
  check_index(r, a.rows(), false);
  return std::pow(imlab::trace(a), r);
}

MatrixFunctional MatrixFunctional::trace() { return MatrixFunctional(FunctionalKind::Trace); }
MatrixFunctional MatrixFunctional::determinant() {
  return MatrixFunctional(FunctionalKind::Determinant);
}
MatrixFunctional MatrixFunctional::permanent() {
  return MatrixFunctional(FunctionalKind::Permanent);
}

MatrixFunctional MatrixFunctional::immanant(CharacterFunction chi, std::string name) {
  MatrixFunctional f(FunctionalKind::Immanant);
  if (name.empty()) {
    name = "G" + std::to_string(chi.group().order()) + ",deg" + std::to_string(chi.degree());
  }
  f.name_ = std::move(name);
  f.chi_ = std::move(chi);
  return f;
}

MatrixFunctional MatrixFunctional::immanant_symmetric(Partition lambda) {
  if (!is_partition(lambda)) throw Error(ErrorCode::InvalidPartition, "invalid partition");
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (n > kMaxSymmetricDegree) throw Error(ErrorCode::TooLarge, "S_n immanants need n <= 8");
  MatrixFunctional f(FunctionalKind::Immanant);
  f.name_ = "S" + std::to_string(n) + "[" + CycleType{lambda}.to_string() + "]";
  f.lambda_ = std::move(lambda);
  return f;
}

MatrixFunctional MatrixFunctional::power_sum(int r) {
  check_index(r, 0, false);
  return MatrixFunctional(FunctionalKind::PowerSum, r);
}
MatrixFunctional MatrixFunctional::elementary(int r) {
  check_index(r, 0, false);
  return MatrixFunctional(FunctionalKind::Elementary, r);
}
MatrixFunctional MatrixFunctional::complete(int r) {
  check_index(r, 0, false);
  return MatrixFunctional(FunctionalKind::Complete, r);
}

std::string MatrixFunctional::label() const {
  switch (kind_) {
    case FunctionalKind::Trace: return "tr";
    case FunctionalKind::Determinant: return "det";
    case FunctionalKind::Permanent: return "per";
    case FunctionalKind::Immanant: return "imm:" + name_;
    case FunctionalKind::PowerSum: return "p:" + std::to_string(r_);
    case FunctionalKind::Elementary: return "e:" + std::to_string(r_);
    case FunctionalKind::Complete: return "s:" + std::to_string(r_);
  }
  return "?";
}

void MatrixFunctional::check_applicable(std::size_t n) const {
  switch (kind_) {
    case FunctionalKind::Permanent:
      if (n > kMaxPermanentSize) throw Error(ErrorCode::TooLarge, "permanent needs n <= 14");
      break;
    case FunctionalKind::Immanant: {
      const std::size_t degree = chi_ ? chi_->group().degree()
                                      : static_cast<std::size_t>(std::accumulate(
                                            lambda_->begin(), lambda_->end(), 0));
      if (degree != n) {
        throw Error(ErrorCode::DegreeMismatch, label() + " has degree " +
                                                   std::to_string(degree) + ", matrix is " +
                                                   std::to_string(n) + "x" + std::to_string(n));
      }
      break;
    }
    case FunctionalKind::Elementary:
      check_index(r_, n, true);
      break;
    default:
      break;
  }
}

bool MatrixFunctional::applicable(std::size_t n) const {
  try {
    check_applicable(n);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Complex apply_functional(const MatrixFunctional& f, const ComplexMatrix& a) {
  require_square(a, "apply_functional");
  f.check_applicable(a.rows());
  switch (f.kind()) {
    case FunctionalKind::Trace: return trace(a);
    case FunctionalKind::Determinant: return determinant(a);
    case FunctionalKind::Permanent: return permanent(a);
    case FunctionalKind::Immanant:
      return f.character() ? immanant(a, *f.character()) : immanant_symmetric(a, *f.partition());
    case FunctionalKind::PowerSum: return power_trace(a, f.index());
    case FunctionalKind::Elementary: return elementary_symmetric(a, f.index());
    case FunctionalKind::Complete: return complete_symmetric(a, f.index());
  }
  return {};
}

}  // namespace imlab
