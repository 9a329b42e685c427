#include "imlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "imlab/error.hpp"

namespace imlab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[v]) {
      throw Error(ErrorCode::InvalidPermutation, "images are not a bijection of {0..n-1}");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      if (from < 0 || static_cast<std::size_t>(from) >= n || used[from]) {
        throw Error(ErrorCode::InvalidPermutation, "cycles are not disjoint within degree");
      }
      used[from] = true;
      images[from] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::sign() const {
  // Each cycle of length L contributes L-1 transpositions.
  int parity = 0;
  for (int part : cycle_type(*this).parts) parity += part - 1;
  return parity % 2 == 0 ? 1 : -1;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
  }
  std::vector<int> images(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) images[i] = a(static_cast<std::size_t>(b(i)));
  return Permutation(std::move(images));
}

std::string CycleType::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts[k]);
  }
  return s;
}

CycleType cycle_type(const Permutation& p) {
  const std::size_t n = p.degree();
  std::vector<bool> seen(n, false);
  CycleType ct;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(p(i))) {
      seen[i] = true;
      ++length;
    }
    ct.parts.push_back(length);
  }
  std::sort(ct.parts.begin(), ct.parts.end(), std::greater<>());
  return ct;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (!index_.emplace(elements_[k], k).second) {
      throw Error(ErrorCode::NotAGroup, "duplicate group element");
    }
  }
  verify_group_axioms();
}

PermutationGroup PermutationGroup::from_generators(std::size_t degree,
                                                   const std::vector<Permutation>& generators) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator degree " + std::to_string(g.degree()) +
                                                 " differs from " + std::to_string(degree));
    }
  }
  std::vector<Permutation> gens = generators;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::set<Permutation> seen(elements.begin(), elements.end());
  std::vector<Permutation> layer = elements;
  while (!layer.empty()) {
    std::set<Permutation> fresh;
    for (const auto& x : layer) {
      for (const auto& g : gens) {
        Permutation y = x * g;
        if (!seen.count(y)) fresh.insert(std::move(y));
      }
    }
    if (seen.size() + fresh.size() > kMaxGroupOrder) {
      throw Error(ErrorCode::GroupTooLarge,
                  "group exceeds " + std::to_string(kMaxGroupOrder) + " elements");
    }
    layer.assign(fresh.begin(), fresh.end());
    for (const auto& y : layer) {
      seen.insert(y);
      elements.push_back(y);
    }
  }
  return PermutationGroup(degree, std::move(gens), std::move(elements));
}

PermutationGroup PermutationGroup::symmetric(std::size_t n) {
  if (n > 7) {
    throw Error(ErrorCode::GroupTooLarge, "explicit S_n is limited to n <= 7");
  }
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<int> long_cycle(n);
    std::iota(long_cycle.begin(), long_cycle.end(), 0);
    if (n >= 3) gens.push_back(Permutation::from_cycles(n, {long_cycle}));
  }
  return from_generators(n, gens);
}

PermutationGroup PermutationGroup::trivial(std::size_t n) { return from_generators(n, {}); }

std::size_t PermutationGroup::index_of(const Permutation& p) const {
  const auto it = index_.find(p);
  return it == index_.end() ? npos : it->second;
}

bool PermutationGroup::is_full_symmetric() const noexcept {
  std::size_t factorial = 1;
  for (std::size_t k = 2; k <= degree_; ++k) factorial *= k;
  return elements_.size() == factorial;
}

void PermutationGroup::verify_group_axioms() const {
  if (elements_.empty() || !elements_.front().is_identity()) {
    throw Error(ErrorCode::NotAGroup, "first element must be the identity");
  }
  for (const auto& g : elements_) {
    if (!contains(g.inverse())) throw Error(ErrorCode::NotAGroup, "missing inverse");
  }
  // All pairwise products for small groups. Above 720 elements, closure of a
  // finite set under right multiplication by the generators is equivalent.
  const bool full_sweep = elements_.size() <= 720;
  const std::vector<Permutation>& right = full_sweep ? elements_ : generators_;
  for (const auto& g : elements_) {
    for (const auto& h : right) {
      if (!contains(g * h)) throw Error(ErrorCode::NotAGroup, "not closed under composition");
    }
  }
}

}  // namespace imlab
