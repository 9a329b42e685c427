#pragma once

#include <map>
#include <memory>
#include <vector>

#include "imlab/matrix.hpp"
#include "imlab/permutation.hpp"

namespace imlab {

using Partition = std::vector<int>;

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);
bool is_partition(const Partition& p);

inline constexpr int kMaxSymmetricDegree = 8;

/// Irreducible character chi^lambda of S_n at the class mu, by the
/// Murnaghan-Nakayama border-strip recursion. n <= 8. Thread safe; results
/// are memoized in a process-wide cache.
long long sn_character(const Partition& lambda, const Partition& mu);

/// A class function on a permutation group, stored per element in the
/// group's element order. Construction checks that chi(e) is a positive
/// integer and that the values are constant on sampled conjugacy classes.
class CharacterFunction {
 public:
  CharacterFunction(std::shared_ptr<const PermutationGroup> group, std::vector<Complex> values);

  static CharacterFunction trivial(std::shared_ptr<const PermutationGroup> group);
  static CharacterFunction sign(std::shared_ptr<const PermutationGroup> group);
  /// chi^lambda on a group that must be all of S_n.
  static CharacterFunction sn_irreducible(std::shared_ptr<const PermutationGroup> group,
                                          const Partition& lambda);
  /// chi_k(g^j) = exp(2 pi i jk / |G|) on a cyclic group.
  static CharacterFunction cyclic(std::shared_ptr<const PermutationGroup> group, int k);
  /// Values looked up by cycle type; every cycle type present in the group
  /// must be covered.
  static CharacterFunction from_cycle_types(std::shared_ptr<const PermutationGroup> group,
                                            const std::map<CycleType, Complex>& values);

  const PermutationGroup& group() const noexcept { return *group_; }
  std::shared_ptr<const PermutationGroup> group_ptr() const noexcept { return group_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  Complex operator()(std::size_t element_index) const { return values_[element_index]; }
  Complex at(const Permutation& p) const;
  /// chi(e).
  int degree() const noexcept { return degree_; }

  CharacterFunction operator+(const CharacterFunction& other) const;

 private:
  std::shared_ptr<const PermutationGroup> group_;
  std::vector<Complex> values_;
  int degree_;
};

/// True when chi is class-constant on its group and (1/|G|) sum |chi|^2 = 1
/// within 1e-9, i.e. chi passes the irreducibility norm test.
bool verify_character(const CharacterFunction& chi);

/// True when chi(tau sigma tau^-1) = chi(sigma) within `tol` on every pair
/// (small groups) or on a fixed deterministic sample of pairs.
bool is_class_constant(const PermutationGroup& group, const std::vector<Complex>& values,
                       double tol = 1e-9);

}  // namespace imlab
