#include <doctest.h>

#include <cmath>
#include <memory>

#include "imlab/error.hpp"
#include "imlab/inequality.hpp"
#include "imlab/multilinear.hpp"
#include "imlab/random.hpp"
#include "support.hpp"

using namespace imlab;

namespace {

InequalityCase with(CaseId id, std::optional<MatrixFunctional> f = std::nullopt) {
  return InequalityCase{id, std::move(f)};
}

double margin_of(const InequalityCase& c, std::vector<ComplexMatrix> mats, std::size_t m,
                 std::size_t n) {
  return check_case(c, mats, m, n, kDefaultMarginTolerance).margin;
}

ComplexMatrix conj_by(const ComplexMatrix& u, const ComplexMatrix& a) {
  return u * a * conjugate_transpose(u);
}

std::vector<MatrixFunctional> unitarily_invariant(std::size_t size) {
  std::vector<MatrixFunctional> out{MatrixFunctional::trace(), MatrixFunctional::determinant(),
                                    MatrixFunctional::power_sum(2), MatrixFunctional::complete(2)};
  if (size >= 2) out.push_back(MatrixFunctional::elementary(2));
  return out;
}

}  // namespace

TEST_CASE("case ids") {
  CHECK(all_case_ids().size() == 12);
  for (CaseId id : all_case_ids()) CHECK(parse_case_id(to_string(id)) == id);
  CHECK_THROWS_AS(parse_case_id("EEQ9"), Error);
  CHECK(arity(CaseId::EEQ0) == 2);
  CHECK(arity(CaseId::THM35_G1) == 3);
  CHECK(ambient(CaseId::LEM32) == Ambient::Matrix);
  CHECK(ambient(CaseId::EQLS) == Ambient::Block);
  CHECK(with(CaseId::EEQ1, MatrixFunctional::permanent()).label() == "EEQ1/per");
  InequalityCase lem{CaseId::LEM32, std::nullopt, PowerKind::Wedge, 2};
  CHECK(lem.label() == "LEM32/wedge/r2");
}

TEST_CASE("superadditivity equality cases") {
  Rng rng(61);
  const ComplexMatrix a = random_psd(3, rng);
  const ComplexMatrix zero = ComplexMatrix::zeros(3, 3);
  CHECK(margin_of(with(CaseId::EEQ0), {a, zero}, 1, 3) == 0.0);
}

TEST_CASE("check_case rejects inconsistent instances") {
  Rng rng(62);
  const ComplexMatrix a = random_psd(2, rng);
  CHECK_THROWS_AS(margin_of(with(CaseId::EEQ0), {a}, 1, 2), Error);
  CHECK_THROWS_AS(margin_of(with(CaseId::EEQ0), {a, a}, 1, 3), Error);
  CHECK_THROWS_AS(margin_of(with(CaseId::EQLS), {a, a}, 2, 2), Error);
  CHECK_THROWS_AS(margin_of(with(CaseId::EEQ1), {a, a}, 1, 2), Error);
}

TEST_CASE("the three-term form improves the four-term form") {
  Rng rng(63);
  for (const auto& f : default_functionals(3)) {
    for (int k = 0; k < 20; ++k) {
      const ComplexMatrix a = random_psd(3, rng), b = random_psd(3, rng), c = random_psd(3, rng);
      const double tol = kDefaultMarginTolerance * (1 + frobenius_norm(a + b + c));
      const double cor = margin_of(with(CaseId::EEQ2, f), {a, b, c}, 1, 3);
      const double pair = margin_of(with(CaseId::EEQ1, f), {a, b}, 1, 3);
      CHECK(cor - pair >= -tol);
      CHECK(pair >= -tol);
      CHECK(margin_of(with(CaseId::EEQ3, f), {a, b, c}, 1, 3) ==
            doctest::Approx(cor - pair).scale(1 + std::abs(cor)));
    }
  }
}

TEST_CASE("one block row collapses to the scalar determinant inequality") {
  Rng rng(64);
  for (int k = 0; k < 10; ++k) {
    const std::vector<ComplexMatrix> mats{random_psd(3, rng), random_psd(3, rng),
                                          random_psd(3, rng)};
    const double block = margin_of(with(CaseId::THM35_G2, MatrixFunctional::determinant()), mats, 1, 3);
    const double scalar = margin_of(with(CaseId::SCALAR_DET_3TERM), mats, 1, 3);
    CHECK(block == doctest::Approx(scalar).epsilon(1e-12).scale(1));
    const double cor = margin_of(with(CaseId::COR36_G2, MatrixFunctional::determinant()), mats, 1, 3);
    CHECK(cor == doctest::Approx(margin_of(with(CaseId::SCALAR_DET_COR), mats, 1, 3)).scale(1));
  }
}

TEST_CASE("three-term block inequalities with C = 0") {
  Rng rng(65);
  const ComplexMatrix zero = ComplexMatrix::zeros(4, 4);
  for (int k = 0; k < 5; ++k) {
    const ComplexMatrix a = random_psd(4, rng), b = random_psd(4, rng);
    for (CaseId id : {CaseId::THM35_G1, CaseId::THM35_G2}) {
      for (const auto& f : default_functionals(2)) {
        const double margin = margin_of(with(id, f), {a, b, zero}, 2, 2);
        CHECK(std::abs(margin) <= 1e-9 * (1 + std::pow(frobenius_norm(a + b), 2)));
      }
    }
  }
}

TEST_CASE("scalar margins are unitarily invariant") {
  Rng rng(66);
  for (int k = 0; k < 10; ++k) {
    const std::vector<ComplexMatrix> mats{random_psd(3, rng), random_psd(3, rng),
                                          random_psd(3, rng)};
    const ComplexMatrix u = random_unitary(3, rng);
    std::vector<ComplexMatrix> rotated;
    for (const auto& a : mats) rotated.push_back(conj_by(u, a));
    for (const auto& f : unitarily_invariant(3)) {
      const double x = margin_of(with(CaseId::EEQ3, f), mats, 1, 3);
      const double y = margin_of(with(CaseId::EEQ3, f), rotated, 1, 3);
      CHECK(std::abs(x - y) <= 1e-7 * (1 + std::abs(x)));
    }
  }
}

TEST_CASE("block margins are invariant under the matching unitary conjugation") {
  Rng rng(67);
  const std::size_t m = 2, n = 3;
  for (int k = 0; k < 5; ++k) {
    const std::vector<ComplexMatrix> mats{random_psd(m * n, rng), random_psd(m * n, rng),
                                          random_psd(m * n, rng)};
    // U (x) I conjugates every G_rs by U; I (x) V conjugates every A_ij by V.
    const ComplexMatrix outer = kronecker(random_unitary(m, rng), ComplexMatrix::identity(n));
    const ComplexMatrix inner = kronecker(ComplexMatrix::identity(m), random_unitary(n, rng));
    for (const auto& [id, w, size] : {std::tuple{CaseId::THM35_G1, outer, m},
                                      std::tuple{CaseId::THM35_G2, inner, n}}) {
      std::vector<ComplexMatrix> rotated;
      for (const auto& a : mats) rotated.push_back(conj_by(w, a));
      for (const auto& f : unitarily_invariant(size)) {
        const double x = margin_of(with(id, f), mats, m, n);
        const double y = margin_of(with(id, f), rotated, m, n);
        CHECK(std::abs(x - y) <= 1e-7 * (1 + std::abs(x)));
      }
    }
  }
}

TEST_CASE("determinant margin scales homogeneously") {
  Rng rng(68);
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix a = random_psd(3, rng), b = random_psd(3, rng);
    const double t = 0.5 + 2.0 * rng.uniform();
    const double base = margin_of(with(CaseId::EEQ0), {a, b}, 1, 3);
    const double scaled = margin_of(with(CaseId::EEQ0), {a * Complex(t), b * Complex(t)}, 1, 3);
    CHECK(scaled == doctest::Approx(std::pow(t, 3) * base).epsilon(1e-7));
  }
}

TEST_CASE("suites are deterministic and independent of thread count") {
  const auto cases = cases_for({CaseId::EEQ0, CaseId::THM35_G1, CaseId::LEM32}, 2, 2);
  const auto first = run_suite(cases, 20, 2, 2, kDefaultMarginTolerance, 5);
  setenv("IMMANANT_LAB_THREADS", "1", 1);
  const auto serial = run_suite(cases, 20, 2, 2, kDefaultMarginTolerance, 5);
  unsetenv("IMMANANT_LAB_THREADS");
  REQUIRE(first.size() == serial.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    CHECK(first[k].inequality.label() == serial[k].inequality.label());
    CHECK(first[k].worst_margin == serial[k].worst_margin);
    CHECK(first[k].failures == serial[k].failures);
    CHECK(first[k].case_seed == serial[k].case_seed);
  }
  const auto other = run_suite(cases, 20, 2, 2, kDefaultMarginTolerance, 6);
  CHECK(other[0].worst_margin != first[0].worst_margin);
}

TEST_CASE("failures are recorded with replayable trial indices") {
  // A negative tolerance turns every equality-tight instance into a failure.
  const auto cases = cases_for({CaseId::LEM32}, 2, 2);
  const auto reports = run_suite({cases.front()}, 6, 2, 2, -1e6, 9);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].failures == 6);
  CHECK(reports[0].failing_trials == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
  const auto instance = trial_instance(cases.front(), 9, 3, 2, 2);
  const auto replay = check_case(cases.front(), instance, 2, 2, -1e6);
  CHECK_FALSE(replay.passes);
}

TEST_CASE("suite edge cases") {
  const auto none = run_suite(cases_for({CaseId::EEQ0}, 1, 3), 0, 1, 3, 1e-8, 1);
  REQUIRE(none.size() == 1);
  CHECK(none[0].failures == 0);
  CHECK_FALSE(none[0].worst_margin.has_value());

  const auto eeq0 = run_suite(cases_for({CaseId::EEQ0}, 1, 3), 100, 1, 3, 1e-8, 7);
  CHECK(eeq0[0].failures == 0);

  CHECK_THROWS_AS(run_suite(cases_for({CaseId::EEQ0}, 1, 5), 1, 1, 5, 1e-8, 1), Error);
  CHECK_THROWS_AS(run_suite({with(CaseId::EEQ1, MatrixFunctional::permanent())}, 1, 1, 4, 1e-8, 1),
                  Error);
}

TEST_CASE("default case lists") {
  CHECK(default_immanant(3)->label() == "imm:S3[2,1]");
  CHECK(default_immanant(2).has_value());
  CHECK_FALSE(default_immanant(4).has_value());
  CHECK(default_functionals(3).size() == 7);
  CHECK(default_functionals(2).size() == 7);
  const auto cases = default_cases(3, 3);
  std::size_t lem = 0, thm = 0;
  for (const auto& c : cases) {
    lem += c.id == CaseId::LEM32;
    thm += c.id == CaseId::THM35_G1;
  }
  CHECK(lem == 3);
  CHECK(thm == 7);
}

TEST_CASE("default suite passes on small sizes") {
  for (std::size_t s : {2u, 3u}) {
    const auto reports = run_suite(default_cases(s, s), 20, s, s, kDefaultMarginTolerance, 11);
    for (const auto& r : reports) {
      INFO(r.inequality.label());
      CHECK(r.failures == 0);
    }
  }
}
