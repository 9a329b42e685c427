#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "imlab/functionals.hpp"
#include "imlab/matrix.hpp"
#include "imlab/multilinear.hpp"

namespace imlab {

enum class CaseId {
  EEQ0,              // det(A+B) >= det A + det B
  EEQ1,              // f(A+B) >= f(A) + f(B)
  EEQ2,              // f(A+B+C) + f(C) >= f(A+C) + f(B+C)
  EEQ3,              // f(A+B+C) + f(A) + f(B) + f(C) >= f(A+B) + f(A+C) + f(B+C)
  EQLS,              // det_2(A+B) >= det_2(A) + det_2(B), Loewner order
  THM35_G1,          // three-term block inequality for the first partial function
  THM35_G2,          // ... for the second partial function
  COR36_G1,          // Gamma(A+B+C) + Gamma(C) >= Gamma(A+C) + Gamma(B+C), first
  COR36_G2,          // ... second
  SCALAR_DET_3TERM,  // EEQ3 with det
  SCALAR_DET_COR,    // EEQ2 with det
  LEM32,             // P(A+B+C) + P(A) + P(B) + P(C) >= P(A+B) + P(A+C) + P(B+C)
};

enum class Ambient { Scalar, Matrix, Block };

std::string_view to_string(CaseId id);
CaseId parse_case_id(std::string_view text);
const std::vector<CaseId>& all_case_ids();
int arity(CaseId id);
Ambient ambient(CaseId id);
bool uses_functional(CaseId id);

struct InequalityCase {
  CaseId id;
  std::optional<MatrixFunctional> functional;  // EEQ1-3, THM35_*, COR36_*
  PowerKind power_kind = PowerKind::Tensor;    // LEM32
  int r = 2;                                   // LEM32

  /// "THM35_G1/per", "LEM32/wedge/r2", "EEQ0".
  std::string label() const;
};

struct CaseMargin {
  double margin;     // LHS - RHS, or lambda_min(LHS - RHS)
  double threshold;  // the case passes iff margin >= -threshold
  bool passes;
};

/// Margin of one inequality on one instance. Scalar and LEM32 cases take n x n
/// matrices; block cases take (mn) x (mn) matrices read as M_m(M_n). The
/// threshold is tol * (1 + max input Frobenius norm). Scalar functional values
/// must be real to 1e-8 (1 + |re|), otherwise the case fails.
CaseMargin check_case(const InequalityCase& c, std::span<const ComplexMatrix> instance,
                      std::size_t m, std::size_t n, double tol);

struct TrialReport {
  InequalityCase inequality;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<double> worst_margin;  // empty when trials == 0
  std::uint64_t seed = 0;              // suite seed
  std::uint64_t case_seed = 0;         // seed of this case's trial streams
  std::vector<std::size_t> failing_trials;
  double elapsed_ms = 0.0;
};

inline constexpr double kDefaultMarginTolerance = 1e-8;

/// Seed of trial `trial` of a case: Rng(case_seed).split(trial), where
/// case_seed mixes the suite seed with a hash of the case label.
std::uint64_t case_seed(std::uint64_t suite_seed, const InequalityCase& c);
/// The PSD matrices fed to trial `trial` of case `c`.
std::vector<ComplexMatrix> trial_instance(const InequalityCase& c, std::uint64_t suite_seed,
                                          std::size_t trial, std::size_t m, std::size_t n);

/// Runs every case for `trials` random PSD instances. Deterministic in the
/// seed regardless of thread count.
std::vector<TrialReport> run_suite(const std::vector<InequalityCase>& cases, std::size_t trials,
                                   std::size_t m, std::size_t n, double tol, std::uint64_t seed);

/// Immanant used by default at a given size: (S_3, chi^(2,1)) at 3 and the
/// diagonal-product functional of the trivial group below that.
std::optional<MatrixFunctional> default_immanant(std::size_t size);
/// tr, det, per, imm, p_2, e_2, s_2, restricted to those applicable at `size`
/// and within the size caps (per/imm need size <= 3).
std::vector<MatrixFunctional> default_functionals(std::size_t size);
/// The full default case list for block size m and inner size n.
std::vector<InequalityCase> default_cases(std::size_t m, std::size_t n);
/// Default list filtered to the given ids.
std::vector<InequalityCase> cases_for(const std::vector<CaseId>& ids, std::size_t m,
                                      std::size_t n);

}  // namespace imlab
