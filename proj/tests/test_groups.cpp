#include <doctest.h>

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>

#include "imlab/character.hpp"
#include "imlab/error.hpp"
#include "imlab/permutation.hpp"
#include "support.hpp"

using namespace imlab;

namespace {

std::shared_ptr<const PermutationGroup> sym(std::size_t n) {
  return std::make_shared<const PermutationGroup>(PermutationGroup::symmetric(n));
}

// Standard Young tableaux of shape lambda, counted by placing 1..n one cell
// at a time at the end of a row whose length stays below the row above.
long long count_tableaux(std::vector<int> filled, const Partition& shape, int remaining) {
  if (remaining == 0) return 1;
  long long total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (filled[r] < shape[r] && (r == 0 || filled[r] < filled[r - 1])) {
      ++filled[r];
      total += count_tableaux(filled, shape, remaining - 1);
      --filled[r];
    }
  }
  return total;
}

long long tableaux(const Partition& shape) {
  return count_tableaux(std::vector<int>(shape.size(), 0), shape,
                        std::accumulate(shape.begin(), shape.end(), 0));
}

CycleType class_of(const Partition& mu) { return CycleType{mu}; }

}  // namespace

TEST_CASE("group closure") {
  const auto s2 = PermutationGroup::from_generators(2, {Permutation({1, 0})});
  CHECK(s2.order() == 2);

  const auto s3 = PermutationGroup::from_generators(
      3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(s3.order() == 6);
  std::vector<int> p{0, 1, 2};
  do {
    CHECK(s3.contains(Permutation(p)));
  } while (std::next_permutation(p.begin(), p.end()));

  const auto e = PermutationGroup::from_generators(4, {});
  CHECK(e.order() == 1);
  CHECK(e.element(0).is_identity());

  const auto c4 = PermutationGroup::from_generators(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(c4.order() == 4);
  CHECK_FALSE(c4.is_full_symmetric());
}

TEST_CASE("closure output is closed under composition and inverses") {
  const auto d4 = PermutationGroup::from_generators(
      4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 2}})});
  CHECK(d4.order() == 8);
  std::set<Permutation> distinct(d4.elements().begin(), d4.elements().end());
  CHECK(distinct.size() == d4.order());
  for (const auto& g : d4.elements()) {
    CHECK(d4.contains(g.inverse()));
    for (const auto& h : d4.elements()) CHECK(d4.contains(g * h));
  }
}

TEST_CASE("group construction errors") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  CHECK(code([] { PermutationGroup::from_generators(3, {Permutation({1, 0})}); }) ==
        ErrorCode::DegreeMismatch);
  CHECK(code([] { Permutation({0, 0, 1}); }) == ErrorCode::InvalidPermutation);
  CHECK(code([] { Permutation({0, 3}); }) == ErrorCode::InvalidPermutation);
  // S_8 has 40320 elements.
  CHECK(code([] {
          PermutationGroup::from_generators(8, {Permutation::from_cycles(8, {{0, 1}}),
                                                Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})});
        }) == ErrorCode::GroupTooLarge);
}

TEST_CASE("composition convention and sign") {
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  const auto ab = a * b;
  CHECK(ab(1) == a(b(1)));
  CHECK(ab(2) == a(b(2)));
  std::vector<int> p{0, 1, 2, 3, 4};
  do {
    CHECK(Permutation(p).sign() == imlab::testing::inversion_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("cycle types") {
  CHECK(cycle_type(Permutation::identity(4)).parts == std::vector<int>{1, 1, 1, 1});
  CHECK(cycle_type(Permutation::from_cycles(3, {{0, 1, 2}})).parts == std::vector<int>{3});
  const auto t = cycle_type(Permutation::from_cycles(5, {{0, 1}, {2, 3}}));
  CHECK(t.parts == std::vector<int>{2, 2, 1});
  CHECK(t.to_string() == "2,2,1");
}

TEST_CASE("symmetric group characters") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) CHECK(sn_character({n}, mu) == 1);
  }
  CHECK(sn_character({1, 1, 1}, {2, 1}) == -1);
  CHECK(sn_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(sn_character({2, 1}, {3}) == -1);
  CHECK(sn_character({2, 1}, {2, 1}) == 0);
  CHECK_THROWS_AS(sn_character({2, 1}, {2, 2}), Error);
  CHECK_THROWS_AS(sn_character({1, 2}, {2, 1}), Error);
}

TEST_CASE("character degrees count standard tableaux") {
  for (int n = 1; n <= 8; ++n) {
    long long sum_squares = 0;
    for (const auto& lambda : partitions_of(n)) {
      const long long d = sn_character(lambda, Partition(n, 1));
      CHECK(d > 0);
      CHECK(d == tableaux(lambda));
      sum_squares += d * d;
    }
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(sum_squares == fact);
  }
}

TEST_CASE("sign character is the parity of a cycle type") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& mu : partitions_of(n)) {
      int transpositions = 0;
      for (int part : mu) transpositions += part - 1;
      CHECK(sn_character(Partition(n, 1), mu) == (transpositions % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("column orthogonality on S3 and S4") {
  for (int n : {3, 4}) {
    const auto classes = partitions_of(n);
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        long long s = 0;
        for (const auto& lambda : partitions_of(n)) {
          s += sn_character(lambda, classes[a]) * sn_character(lambda, classes[b]);
        }
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("verify_character") {
  const auto s3 = sym(3);
  CHECK(verify_character(CharacterFunction::sign(s3)));
  CHECK(verify_character(CharacterFunction::trivial(s3)));
  const auto standard = CharacterFunction::sn_irreducible(s3, {2, 1});
  CHECK(verify_character(standard));
  CHECK(standard.degree() == 2);
  double norm = 0;
  for (const auto& v : standard.values()) norm += std::norm(v);
  CHECK(norm == doctest::Approx(6.0));
  CHECK_FALSE(verify_character(CharacterFunction::trivial(s3) + CharacterFunction::sign(s3)));
}

TEST_CASE("built-in characters are class functions") {
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto g = sym(n);
    for (const auto& lambda : partitions_of(static_cast<int>(n))) {
      const auto chi = CharacterFunction::sn_irreducible(g, lambda);
      for (const auto& s : g->elements()) {
        for (const auto& t : g->elements()) {
          CHECK(chi.at(t * s * t.inverse()) == chi.at(s));
        }
      }
      CHECK(verify_character(chi));
    }
  }
}

TEST_CASE("cyclic characters") {
  const auto c5 = std::make_shared<const PermutationGroup>(
      PermutationGroup::from_generators(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}));
  for (int k = 0; k < 5; ++k) {
    const auto chi = CharacterFunction::cyclic(c5, k);
    CHECK(verify_character(chi));
    CHECK(chi.degree() == 1);
  }
  // Distinct cyclic characters are orthogonal.
  const auto a = CharacterFunction::cyclic(c5, 1), b = CharacterFunction::cyclic(c5, 2);
  Complex inner{};
  for (std::size_t k = 0; k < c5->order(); ++k) inner += a(k) * std::conj(b(k));
  CHECK(std::abs(inner) <= 1e-12);
  CHECK_THROWS_AS(CharacterFunction::cyclic(sym(3), 1), Error);
}

TEST_CASE("character construction errors") {
  const auto s3 = sym(3);
  CHECK_THROWS_AS(CharacterFunction(s3, std::vector<Complex>(6, Complex(0))), Error);
  CHECK_THROWS_AS(CharacterFunction(s3, std::vector<Complex>(5, Complex(1))), Error);
  // Not constant on the class of transpositions.
  std::vector<Complex> values(6, Complex(1));
  for (std::size_t k = 0; k < 6; ++k) {
    if (cycle_type(s3->element(k)).parts == std::vector<int>{2, 1}) {
      values[k] = Complex(-1);
      break;
    }
  }
  CHECK_THROWS_AS(CharacterFunction(s3, values), Error);
  CHECK_THROWS_AS(CharacterFunction::from_cycle_types(s3, {{class_of({1, 1, 1}), 1}}), Error);
  const auto c3 = std::make_shared<const PermutationGroup>(
      PermutationGroup::from_generators(3, {Permutation::from_cycles(3, {{0, 1, 2}})}));
  CHECK_THROWS_AS(CharacterFunction::sn_irreducible(c3, {2, 1}), Error);
}
