#include "imlab/combinatorics.hpp"

namespace imlab {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

namespace {

// Odometer over tuples with t[k] >= lower(t[k-1]).
template <class Lower>
std::vector<IndexTuple> enumerate(std::size_t n, std::size_t r, Lower lower) {
  std::vector<IndexTuple> out;
  if (r == 0) {
    out.emplace_back();
    return out;
  }
  IndexTuple t(r);
  auto fill_from = [&](std::size_t pos) {
    for (std::size_t k = pos; k < r; ++k) t[k] = k == 0 ? 0 : lower(t[k - 1]);
  };
  fill_from(0);
  if (t[r - 1] >= n) return out;
  while (true) {
    out.push_back(t);
    std::size_t pos = r;
    while (pos > 0) {
      --pos;
      ++t[pos];
      fill_from(pos + 1);
      if (t[pos] < n && t[r - 1] < n) break;
      if (pos == 0) return out;
    }
  }
}

}  // namespace

std::vector<IndexTuple> all_tuples(std::size_t n, std::size_t r) {
  return enumerate(n, r, [](std::size_t) { return std::size_t{0}; });
}

std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t r) {
  return enumerate(n, r, [](std::size_t prev) { return prev + 1; });
}

std::vector<IndexTuple> nondecreasing_tuples(std::size_t n, std::size_t r) {
  return enumerate(n, r, [](std::size_t prev) { return prev; });
}

std::uint64_t multiplicity_factorial(const IndexTuple& sorted) {
  std::uint64_t result = 1;
  std::size_t run = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    run = (k > 0 && sorted[k] == sorted[k - 1]) ? run + 1 : 1;
    result *= run;
  }
  return result;
}

}  // namespace imlab
