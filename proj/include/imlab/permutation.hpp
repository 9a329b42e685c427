#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace imlab {

/// Bijection of {0, ..., n-1} in one-line notation: p(i) = images[i].
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);
  /// Builds a permutation of degree n from disjoint cycles, e.g. {{0, 1}, {2, 3}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// +1 for even, -1 for odd.
  int sign() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (a * b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// Weakly decreasing cycle lengths; a partition of the degree.
struct CycleType {
  std::vector<int> parts;

  std::string to_string() const;  // "2,1"
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);

inline constexpr std::size_t kMaxGroupOrder = 10080;

/// Finite permutation group stored as an explicit element list with the
/// identity first. Closure under composition is verified on construction.
class PermutationGroup {
 public:
  /// Closure of the generators. Elements are ordered breadth-first from the
  /// identity by word length, lexicographic within each layer.
  static PermutationGroup from_generators(std::size_t degree,
                                          const std::vector<Permutation>& generators);
  /// Full S_n, n <= 7.
  static PermutationGroup symmetric(std::size_t n);
  static PermutationGroup trivial(std::size_t n);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(std::size_t k) const { return elements_[k]; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Position of p in elements(), or npos.
  std::size_t index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) != npos; }
  bool is_full_symmetric() const noexcept;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::vector<Permutation> elements);
  void verify_group_axioms() const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> index_;
};

}  // namespace imlab
