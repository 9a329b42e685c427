#include "imlab/character.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <set>

#include "imlab/error.hpp"
#include "imlab/random.hpp"

namespace imlab {

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n <= 0) return out;
  Partition current;
  // Largest-first parts give reverse lexicographic order.
  auto recurse = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  return out;
}

bool is_partition(const Partition& p) {
  if (p.empty()) return false;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0) return false;
    if (k > 0 && p[k] > p[k - 1]) return false;
  }
  return true;
}

namespace {

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

// Beta-numbers: lambda_i + (l - i) for a fixed length l, strictly decreasing.
long long murnaghan_nakayama(const Partition& lambda, const Partition& mu, std::size_t mu_pos,
                             std::map<std::pair<Partition, std::size_t>, long long>& memo) {
  if (mu_pos == mu.size()) return lambda.empty() ? 1 : 0;
  const auto key = std::make_pair(lambda, mu_pos);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;

  const int hook = mu[mu_pos];
  const int length = static_cast<int>(lambda.size());
  std::vector<int> beta(length);
  for (int i = 0; i < length; ++i) beta[i] = lambda[i] + (length - 1 - i);
  const std::set<int> beta_set(beta.begin(), beta.end());

  long long total = 0;
  for (int i = 0; i < length; ++i) {
    const int moved = beta[i] - hook;
    if (moved < 0 || beta_set.count(moved)) continue;
    // Sign is (-1)^(height) where height counts beta-numbers jumped over.
    int jumped = 0;
    for (int b : beta)
      if (b > moved && b < beta[i]) ++jumped;
    std::vector<int> next = beta;
    next[i] = moved;
    std::sort(next.begin(), next.end(), std::greater<>());
    Partition smaller;
    for (int k = 0; k < length; ++k) {
      const int part = next[k] - (length - 1 - k);
      if (part > 0) smaller.push_back(part);
    }
    const long long sub = murnaghan_nakayama(smaller, mu, mu_pos + 1, memo);
    total += (jumped % 2 == 0 ? sub : -sub);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

long long sn_character(const Partition& lambda, const Partition& mu) {
  if (!is_partition(lambda) || !is_partition(mu)) {
    throw Error(ErrorCode::InvalidPartition, "lambda and mu must be weakly decreasing positive");
  }
  const int n = partition_size(lambda);
  if (partition_size(mu) != n) {
    throw Error(ErrorCode::NotSamePartitionSize, "lambda and mu partition different integers");
  }
  if (n > kMaxSymmetricDegree) {
    throw Error(ErrorCode::TooLarge, "built-in S_n characters are limited to n <= 8");
  }
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, long long> cache;
  {
    std::lock_guard lock(mutex);
    if (const auto it = cache.find({lambda, mu}); it != cache.end()) return it->second;
  }
  std::map<std::pair<Partition, std::size_t>, long long> memo;
  const long long value = murnaghan_nakayama(lambda, mu, 0, memo);
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(lambda, mu), value);
  return value;
}

bool is_class_constant(const PermutationGroup& group, const std::vector<Complex>& values,
                       double tol) {
  const std::size_t order = group.order();
  auto check = [&](std::size_t s, std::size_t t) {
    const Permutation& sigma = group.element(s);
    const Permutation& tau = group.element(t);
    const std::size_t conj = group.index_of(tau * sigma * tau.inverse());
    return std::abs(values[conj] - values[s]) <= tol;
  };
  if (order * order <= 1'000'000) {
    for (std::size_t s = 0; s < order; ++s)
      for (std::size_t t = 0; t < order; ++t)
        if (!check(s, t)) return false;
    return true;
  }
  Rng rng(0xC1A55C0FFEEULL);
  for (int k = 0; k < 20000; ++k) {
    if (!check(rng.uniform_index(0, order - 1), rng.uniform_index(0, order - 1))) return false;
  }
  return true;
}

CharacterFunction::CharacterFunction(std::shared_ptr<const PermutationGroup> group,
                                     std::vector<Complex> values)
    : group_(std::move(group)), values_(std::move(values)), degree_(0) {
  if (!group_) throw Error(ErrorCode::InvalidCharacter, "character needs a group");
  if (values_.size() != group_->order()) {
    throw Error(ErrorCode::InvalidCharacter, "one value per group element is required");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::InvalidCharacter, "character values must be finite");
    }
  }
  const Complex at_identity = values_.front();
  const double rounded = std::round(at_identity.real());
  if (std::abs(at_identity - Complex(rounded, 0.0)) > 1e-9 || rounded < 1.0) {
    throw Error(ErrorCode::InvalidCharacter, "chi(e) must be a positive integer");
  }
  degree_ = static_cast<int>(rounded);
  if (!is_class_constant(*group_, values_)) {
    throw Error(ErrorCode::InvalidCharacter, "values are not constant on conjugacy classes");
  }
}

Complex CharacterFunction::at(const Permutation& p) const {
  const std::size_t k = group_->index_of(p);
  if (k == PermutationGroup::npos) {
    throw Error(ErrorCode::InvalidPermutation, "permutation is not in the character's group");
  }
  return values_[k];
}

CharacterFunction CharacterFunction::trivial(std::shared_ptr<const PermutationGroup> group) {
  std::vector<Complex> values(group->order(), 1.0);
  return CharacterFunction(std::move(group), std::move(values));
}

CharacterFunction CharacterFunction::sign(std::shared_ptr<const PermutationGroup> group) {
  std::vector<Complex> values;
  values.reserve(group->order());
  for (const auto& p : group->elements()) values.emplace_back(p.sign());
  return CharacterFunction(std::move(group), std::move(values));
}

CharacterFunction CharacterFunction::sn_irreducible(std::shared_ptr<const PermutationGroup> group,
                                                    const Partition& lambda) {
  if (!group->is_full_symmetric()) {
    throw Error(ErrorCode::InvalidCharacter, "built-in irreducibles need the full S_n");
  }
  if (partition_size(lambda) != static_cast<int>(group->degree())) {
    throw Error(ErrorCode::DegreeMismatch, "partition size differs from group degree");
  }
  std::vector<Complex> values;
  values.reserve(group->order());
  for (const auto& p : group->elements()) {
    values.emplace_back(static_cast<double>(sn_character(lambda, cycle_type(p).parts)));
  }
  return CharacterFunction(std::move(group), std::move(values));
}

CharacterFunction CharacterFunction::cyclic(std::shared_ptr<const PermutationGroup> group, int k) {
  const std::size_t order = group->order();
  for (const auto& g : group->elements()) {
    std::vector<std::size_t> power_index(order, PermutationGroup::npos);
    Permutation power = Permutation::identity(group->degree());
    std::size_t j = 0;
    for (; j < order; ++j) {
      const std::size_t idx = group->index_of(power);
      if (power_index[idx] != PermutationGroup::npos) break;
      power_index[idx] = j;
      power = power * g;
    }
    if (j != order) continue;  // g does not generate the group
    std::vector<Complex> values(order);
    for (std::size_t idx = 0; idx < order; ++idx) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(power_index[idx]) *
                           static_cast<double>(k) / static_cast<double>(order);
      values[idx] = std::polar(1.0, angle);
    }
    return CharacterFunction(std::move(group), std::move(values));
  }
  throw Error(ErrorCode::InvalidCharacter, "group is not cyclic");
}

CharacterFunction CharacterFunction::from_cycle_types(
    std::shared_ptr<const PermutationGroup> group, const std::map<CycleType, Complex>& values) {
  std::vector<Complex> per_element;
  per_element.reserve(group->order());
  for (const auto& p : group->elements()) {
    const CycleType ct = cycle_type(p);
    const auto it = values.find(ct);
    if (it == values.end()) {
      throw Error(ErrorCode::InvalidCharacter, "no value for cycle type " + ct.to_string());
    }
    per_element.push_back(it->second);
  }
  return CharacterFunction(std::move(group), std::move(per_element));
}

CharacterFunction CharacterFunction::operator+(const CharacterFunction& other) const {
  if (group_ != other.group_ && group_->elements() != other.group_->elements()) {
    throw Error(ErrorCode::DegreeMismatch, "characters live on different groups");
  }
  std::vector<Complex> sum(values_.size());
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = values_[k] + other.values_[k];
  return CharacterFunction(group_, std::move(sum));
}

bool verify_character(const CharacterFunction& chi) {
  if (!is_class_constant(chi.group(), chi.values())) return false;
  double norm = 0.0;
  for (const auto& v : chi.values()) norm += std::norm(v);
  norm /= static_cast<double>(chi.group().order());
  return std::abs(norm - 1.0) <= 1e-9;
}

}  // namespace imlab
