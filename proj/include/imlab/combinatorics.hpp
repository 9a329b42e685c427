#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace imlab {

using IndexTuple = std::vector<std::size_t>;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t factorial(std::uint64_t n);

/// All n^r tuples over {0..n-1}, lexicographic.
std::vector<IndexTuple> all_tuples(std::size_t n, std::size_t r);
/// The C(n, r) strictly increasing tuples, lexicographic.
std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t r);
/// The C(n+r-1, r) weakly increasing tuples, lexicographic.
std::vector<IndexTuple> nondecreasing_tuples(std::size_t n, std::size_t r);

/// Product of factorials of the multiplicities of the values in a sorted tuple.
std::uint64_t multiplicity_factorial(const IndexTuple& sorted);

}  // namespace imlab
