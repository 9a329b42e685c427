#pragma once

#include <optional>
#include <string>

#include "imlab/character.hpp"
#include "imlab/matrix.hpp"
#include "imlab/permutation.hpp"

namespace imlab {

inline constexpr std::size_t kMaxPermanentSize = 14;

/// prod_i a_ii
Complex hadamard_function(const ComplexMatrix& a);

/// Ryser's formula with Gray-code subset order, O(2^n n). n <= 14.
Complex permanent(const ComplexMatrix& a);

/// sum_{sigma in G} chi(sigma) prod_i a_{i, sigma(i)}, summed literally over
/// the group's element list.
Complex immanant(const ComplexMatrix& a, const CharacterFunction& chi);
Complex immanant(const ComplexMatrix& a, const PermutationGroup& group,
                 const CharacterFunction& chi);
/// Immanant for chi^lambda of the full S_n, streaming all n! permutations
/// without materializing the group. n <= 8.
Complex immanant_symmetric(const ComplexMatrix& a, const Partition& lambda);

enum class SpectralKind { PowerSum, Elementary, Complete };

/// p_r = (sum lambda)^r, e_r, s_r of the eigenvalues of a Hermitian matrix.
double spectral_symmetric(const ComplexMatrix& a, SpectralKind kind, int r);

/// Combinatorial forms that hold for any square matrix and agree with the
/// spectral ones on Hermitian input:
///   e_r(A) = sum of principal r x r minors,
///   s_r(A) = sum over r-multisets alpha of per(A[alpha|alpha]) / mu(alpha),
///   p_r(A) = (tr A)^r.
Complex elementary_symmetric(const ComplexMatrix& a, int r);
Complex complete_symmetric(const ComplexMatrix& a, int r);
Complex power_trace(const ComplexMatrix& a, int r);

enum class FunctionalKind {
  Trace,
  Determinant,
  Permanent,
  Immanant,
  PowerSum,
  Elementary,
  Complete,
};

/// One of tr, det, per, d_chi^G, p_r, e_r, s_r with its parameters.
class MatrixFunctional {
 public:
  static MatrixFunctional trace();
  static MatrixFunctional determinant();
  static MatrixFunctional permanent();
  /// `name` is used in labels; defaults to the group order and chi(e).
  static MatrixFunctional immanant(CharacterFunction chi, std::string name = {});
  /// chi^lambda of the full S_n without an explicit group (streamed sum).
  static MatrixFunctional immanant_symmetric(Partition lambda);
  static MatrixFunctional power_sum(int r);
  static MatrixFunctional elementary(int r);
  static MatrixFunctional complete(int r);

  FunctionalKind kind() const noexcept { return kind_; }
  int index() const noexcept { return r_; }
  const std::optional<CharacterFunction>& character() const noexcept { return chi_; }
  const std::optional<Partition>& partition() const noexcept { return lambda_; }

  /// Short tag such as "det", "e:2", "imm:S3[2,1]".
  std::string label() const;
  /// Throws if the functional cannot be applied to n x n matrices.
  void check_applicable(std::size_t n) const;
  bool applicable(std::size_t n) const;

 private:
  explicit MatrixFunctional(FunctionalKind kind, int r = 0) : kind_(kind), r_(r) {}

  FunctionalKind kind_;
  int r_;
  std::optional<CharacterFunction> chi_;
  std::optional<Partition> lambda_;
  std::string name_;
};

Complex apply_functional(const MatrixFunctional& f, const ComplexMatrix& a);

}  // namespace imlab
