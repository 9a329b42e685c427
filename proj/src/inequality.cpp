#include "imlab/inequality.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "imlab/block.hpp"
#include "imlab/error.hpp"
#include "imlab/parallel.hpp"
#include "imlab/random.hpp"
#include "imlab/spectral.hpp"

namespace imlab {

namespace {

struct CaseInfo {
  CaseId id;
  std::string_view name;
  int arity;
  Ambient ambient;
  bool functional;
};

constexpr CaseInfo kCases[] = {
    {CaseId::EEQ0, "EEQ0", 2, Ambient::Scalar, false},
    {CaseId::EEQ1, "EEQ1", 2, Ambient::Scalar, true},
    {CaseId::EEQ2, "EEQ2", 3, Ambient::Scalar, true},
    {CaseId::EEQ3, "EEQ3", 3, Ambient::Scalar, true},
    {CaseId::EQLS, "EQLS", 2, Ambient::Block, false},
    {CaseId::THM35_G1, "THM35_G1", 3, Ambient::Block, true},
    {CaseId::THM35_G2, "THM35_G2", 3, Ambient::Block, true},
    {CaseId::COR36_G1, "COR36_G1", 3, Ambient::Block, true},
    {CaseId::COR36_G2, "COR36_G2", 3, Ambient::Block, true},
    {CaseId::SCALAR_DET_3TERM, "SCALAR_DET_3TERM", 3, Ambient::Scalar, false},
    {CaseId::SCALAR_DET_COR, "SCALAR_DET_COR", 3, Ambient::Scalar, false},
    {CaseId::LEM32, "LEM32", 3, Ambient::Matrix, false},
};

const CaseInfo& info(CaseId id) {
  for (const auto& c : kCases)
    if (c.id == id) return c;
  throw Error(ErrorCode::Parse, "unknown case id");
}

// Real part of a functional value; the imaginary residue must be roundoff.
bool real_value(const Complex& z, double& out) {
  out = z.real();
  return std::abs(z.imag()) <= 1e-8 * (1.0 + std::abs(z.real()));
}

double lambda_min(const ComplexMatrix& m) { return hermitian_eigenvalues(m).front(); }

// Signed combination sum_k coeff_k * value(subset_k) for the three-matrix
// inequalities. Subsets are bit masks over (A, B, C).
struct Term {
  unsigned mask;
  int coeff;
};

constexpr Term kTwoTerm[] = {{0b011, 1}, {0b001, -1}, {0b010, -1}};
constexpr Term kFourTerm[] = {{0b111, 1}, {0b100, 1}, {0b101, -1}, {0b110, -1}};
constexpr Term kThreeTerm[] = {{0b111, 1},  {0b001, 1},  {0b010, 1}, {0b100, 1},
                               {0b011, -1}, {0b101, -1}, {0b110, -1}};

std::span<const Term> terms_for(CaseId id) {
  switch (id) {
    case CaseId::EEQ0:
    case CaseId::EEQ1:
    case CaseId::EQLS: return kTwoTerm;
    case CaseId::EEQ2:
    case CaseId::COR36_G1:
    case CaseId::COR36_G2:
    case CaseId::SCALAR_DET_COR: return kFourTerm;
    default: return kThreeTerm;
  }
}

ComplexMatrix subset_sum(std::span<const ComplexMatrix> mats, unsigned mask) {
  std::optional<ComplexMatrix> sum;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (!((mask >> k) & 1u)) continue;
    if (sum) {
      *sum += mats[k];
    } else {
      sum = mats[k];
    }
  }
  return *sum;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : text) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::size_t functional_size(const InequalityCase& c, std::size_t m, std::size_t n) {
  return (c.id == CaseId::THM35_G1 || c.id == CaseId::COR36_G1) ? m : n;
}

}  // namespace

std::string_view to_string(CaseId id) { return info(id).name; }

CaseId parse_case_id(std::string_view text) {
  for (const auto& c : kCases)
    if (c.name == text) return c.id;
  throw Error(ErrorCode::Parse, "unknown case '" + std::string(text) + "'");
}

const std::vector<CaseId>& all_case_ids() {
  static const std::vector<CaseId> ids = [] {
    std::vector<CaseId> out;
    for (const auto& c : kCases) out.push_back(c.id);
    return out;
  }();
  return ids;
}

int arity(CaseId id) { return info(id).arity; }
Ambient ambient(CaseId id) { return info(id).ambient; }
bool uses_functional(CaseId id) { return info(id).functional; }

std::string InequalityCase::label() const {
  std::string s(to_string(id));
  if (functional) s += "/" + functional->label();
  if (id == CaseId::LEM32) {
    s += "/" + std::string(to_string(power_kind)) + "/r" + std::to_string(r);
  }
  return s;
}

CaseMargin check_case(const InequalityCase& c, std::span<const ComplexMatrix> instance,
                      std::size_t m, std::size_t n, double tol) {
  const CaseInfo& ci = info(c.id);
  if (instance.size() != static_cast<std::size_t>(ci.arity)) {
    throw Error(ErrorCode::DimensionMismatch, std::string(ci.name) + " takes " +
                                                  std::to_string(ci.arity) + " matrices");
  }
  const std::size_t expected = ci.ambient == Ambient::Block ? m * n : n;
  double scale = 0.0;
  for (const auto& a : instance) {
    if (a.rows() != expected || a.cols() != expected) {
      throw Error(ErrorCode::DimensionMismatch,
                  std::string(ci.name) + " expects " + std::to_string(expected) + "-square inputs");
    }
    scale = std::max(scale, frobenius_norm(a));
  }
  if (ci.functional && !c.functional) {
    throw Error(ErrorCode::Parse, std::string(ci.name) + " needs a functional");
  }
  const double threshold = tol * (1.0 + scale);
  const auto terms = terms_for(c.id);

  double margin = 0.0;
  bool real_ok = true;
  switch (ci.ambient) {
    case Ambient::Scalar: {
      const MatrixFunctional f = ci.functional ? *c.functional : MatrixFunctional::determinant();
      for (const auto& t : terms) {
        double v = 0.0;
        real_ok = real_value(apply_functional(f, subset_sum(instance, t.mask)), v) && real_ok;
        margin += t.coeff * v;
      }
      break;
    }
    case Ambient::Matrix: {
      std::optional<ComplexMatrix> diff;
      for (const auto& t : terms) {
        ComplexMatrix p = matrix_power(subset_sum(instance, t.mask), c.r, c.power_kind);
        p *= static_cast<double>(t.coeff);
        if (diff) {
          *diff += p;
        } else {
          diff = std::move(p);
        }
      }
      margin = lambda_min(*diff);
      break;
    }
    case Ambient::Block: {
      const MatrixFunctional f = ci.functional ? *c.functional : MatrixFunctional::determinant();
      const bool first = c.id == CaseId::THM35_G1 || c.id == CaseId::COR36_G1;
      std::optional<ComplexMatrix> diff;
      for (const auto& t : terms) {
        const BlockMatrix block = BlockMatrix::from_flat(subset_sum(instance, t.mask), m, n);
        ComplexMatrix g = first ? partial_function_1(f, block) : partial_function_2(f, block);
        g *= static_cast<double>(t.coeff);
        if (diff) {
          *diff += g;
        } else {
          diff = std::move(g);
        }
      }
      margin = lambda_min(*diff);
      break;
    }
  }
  return {margin, threshold, real_ok && margin >= -threshold};
}

std::uint64_t case_seed(std::uint64_t suite_seed, const InequalityCase& c) {
  return mix_seed(suite_seed, fnv1a(c.label()));
}

std::vector<ComplexMatrix> trial_instance(const InequalityCase& c, std::uint64_t suite_seed,
                                          std::size_t trial, std::size_t m, std::size_t n) {
  Rng rng = Rng(case_seed(suite_seed, c)).split(trial);
  const std::size_t size = ambient(c.id) == Ambient::Block ? m * n : n;
  std::vector<ComplexMatrix> out;
  for (int k = 0; k < arity(c.id); ++k) out.push_back(random_psd(size, rng));
  return out;
}

namespace {

void validate_sizes(const std::vector<InequalityCase>& cases, std::size_t m, std::size_t n) {
  if (m < 1 || n < 1 || m > 4 || n > 4) {
    throw Error(ErrorCode::TooLarge, "suite sizes must satisfy 1 <= m, n <= 4");
  }
  for (const auto& c : cases) {
    if (!c.functional) continue;
    const std::size_t size = functional_size(c, m, n);
    const auto kind = c.functional->kind();
    if ((kind == FunctionalKind::Permanent || kind == FunctionalKind::Immanant) && size > 3) {
      throw Error(ErrorCode::TooLarge, c.label() + " is limited to size 3 in suites");
    }
    c.functional->check_applicable(size);
  }
}

}  // namespace

std::vector<TrialReport> run_suite(const std::vector<InequalityCase>& cases, std::size_t trials,
                                   std::size_t m, std::size_t n, double tol, std::uint64_t seed) {
  validate_sizes(cases, m, n);
  std::vector<TrialReport> reports;
  reports.reserve(cases.size());
  for (const auto& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CaseMargin> margins(trials, CaseMargin{0.0, 0.0, true});
    parallel_for(trials, [&](std::size_t t) {
      const auto instance = trial_instance(c, seed, t, m, n);
      margins[t] = check_case(c, instance, m, n, tol);
    });
    TrialReport report;
    report.inequality = c;
    report.trials = trials;
    report.seed = seed;
    report.case_seed = case_seed(seed, c);
    for (std::size_t t = 0; t < trials; ++t) {
      if (!report.worst_margin || margins[t].margin < *report.worst_margin) {
        report.worst_margin = margins[t].margin;
      }
      if (!margins[t].passes) {
        ++report.failures;
        report.failing_trials.push_back(t);
      }
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    reports.push_back(std::move(report));
  }
  return reports;
}

std::optional<MatrixFunctional> default_immanant(std::size_t size) {
  if (size == 3) {
    auto s3 = std::make_shared<const PermutationGroup>(PermutationGroup::symmetric(3));
    return MatrixFunctional::immanant(CharacterFunction::sn_irreducible(s3, {2, 1}), "S3[2,1]");
  }
  if (size < 3) {
    auto trivial = std::make_shared<const PermutationGroup>(PermutationGroup::trivial(size));
    return MatrixFunctional::immanant(CharacterFunction::trivial(trivial),
                                      "E" + std::to_string(size));
  }
  return std::nullopt;
}

std::vector<MatrixFunctional> default_functionals(std::size_t size) {
  std::vector<MatrixFunctional> out{MatrixFunctional::trace(), MatrixFunctional::determinant()};
  if (size <= 3) {
    out.push_back(MatrixFunctional::permanent());
    if (auto imm = default_immanant(size)) out.push_back(*imm);
  }
  out.push_back(MatrixFunctional::power_sum(2));
  if (size >= 2) out.push_back(MatrixFunctional::elementary(2));
  if (size <= 3) out.push_back(MatrixFunctional::complete(2));
  return out;
}

std::vector<InequalityCase> default_cases(std::size_t m, std::size_t n) {
  std::vector<InequalityCase> out;
  for (CaseId id : all_case_ids()) {
    if (id == CaseId::LEM32) {
      for (PowerKind kind : {PowerKind::Tensor, PowerKind::Wedge, PowerKind::Vee}) {
        if (kind == PowerKind::Wedge && n < 2) continue;
        out.push_back({id, std::nullopt, kind, 2});
      }
      continue;
    }
    if (!uses_functional(id)) {
      out.push_back({id, std::nullopt});
      continue;
    }
    if (id == CaseId::EEQ1 || id == CaseId::EEQ2 || id == CaseId::EEQ3) {
      // Generalized matrix functions only: det, per and the default immanant.
      std::vector<MatrixFunctional> gmfs{MatrixFunctional::determinant()};
      if (n <= 3) {
        gmfs.push_back(MatrixFunctional::permanent());
        if (auto imm = default_immanant(n)) gmfs.push_back(*imm);
      }
      for (auto& f : gmfs) out.push_back({id, std::move(f)});
      continue;
    }
    const bool first = id == CaseId::THM35_G1 || id == CaseId::COR36_G1;
    for (auto& f : default_functionals(first ? m : n)) out.push_back({id, std::move(f)});
  }
  return out;
}

std::vector<InequalityCase> cases_for(const std::vector<CaseId>& ids, std::size_t m,
                                      std::size_t n) {
  std::vector<InequalityCase> out;
  for (auto& c : default_cases(m, n)) {
    if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace imlab
