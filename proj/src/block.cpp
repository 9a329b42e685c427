#include "imlab/block.hpp"

#include "imlab/combinatorics.hpp"
#include "imlab/error.hpp"
#include "imlab/multilinear.hpp"

namespace imlab {

BlockMatrix::BlockMatrix(std::size_t m, std::size_t n, std::vector<ComplexMatrix> blocks)
    : m_(m), n_(n), blocks_(std::move(blocks)) {
  if (m == 0 || n == 0) throw Error(ErrorCode::DimensionMismatch, "block sizes must be positive");
  if (blocks_.size() != m * m) {
    throw Error(ErrorCode::DimensionMismatch, "expected m*m blocks");
  }
  for (const auto& b : blocks_) {
    if (b.rows() != n || b.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "every block must be n x n");
    }
  }
}

BlockMatrix BlockMatrix::from_flat(const ComplexMatrix& flat, std::size_t m, std::size_t n) {
  if (flat.rows() != m * n || flat.cols() != m * n) {
    throw Error(ErrorCode::DimensionMismatch, "flat matrix is not (mn) x (mn)");
  }
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ComplexMatrix b(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) b(r, s) = flat(i * n + r, j * n + s);
      blocks.push_back(std::move(b));
    }
  }
  return BlockMatrix(m, n, std::move(blocks));
}

ComplexMatrix BlockMatrix::flatten() const {
  ComplexMatrix flat(m_ * n_, m_ * n_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j)
      for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t s = 0; s < n_; ++s) flat(i * n_ + r, j * n_ + s) = block(i, j)(r, s);
  return flat;
}

BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.m_ != b.m_ || a.n_ != b.n_) {
    throw Error(ErrorCode::DimensionMismatch, "block matrices differ in shape");
  }
  std::vector<ComplexMatrix> sum;
  sum.reserve(a.blocks_.size());
  for (std::size_t k = 0; k < a.blocks_.size(); ++k) sum.push_back(a.blocks_[k] + b.blocks_[k]);
  return BlockMatrix(a.m_, a.n_, std::move(sum));
}

ComplexMatrix partial_trace_1(const BlockMatrix& a) {
  ComplexMatrix sum = a.block(0, 0);
  for (std::size_t i = 1; i < a.m(); ++i) sum += a.block(i, i);
  return sum;
}

ComplexMatrix partial_trace_2(const BlockMatrix& a) {
  ComplexMatrix out(a.m(), a.m());
  for (std::size_t i = 0; i < a.m(); ++i)
    for (std::size_t j = 0; j < a.m(); ++j) out(i, j) = trace(a.block(i, j));
  return out;
}

BlockMatrix reshuffle(const BlockMatrix& a) {
  const std::size_t m = a.m();
  const std::size_t n = a.n();
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      ComplexMatrix g(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(i, j) = a.block(i, j)(r, s);
      blocks.push_back(std::move(g));
    }
  }
  return BlockMatrix(n, m, std::move(blocks));
}

ComplexMatrix partial_function_2(const MatrixFunctional& f, const BlockMatrix& a) {
  f.check_applicable(a.n());
  ComplexMatrix out(a.m(), a.m());
  for (std::size_t i = 0; i < a.m(); ++i)
    for (std::size_t j = 0; j < a.m(); ++j) out(i, j) = apply_functional(f, a.block(i, j));
  return out;
}

ComplexMatrix partial_function_1(const MatrixFunctional& f, const BlockMatrix& a) {
  return partial_function_2(f, reshuffle(a));
}

BlockMatrix blockwise_tensor_power(const BlockMatrix& a, int r) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(a.blocks().size());
  for (const auto& b : a.blocks()) blocks.push_back(tensor_power(b, r));
  const std::size_t size = blocks.front().rows();
  return BlockMatrix(a.m(), size, std::move(blocks));
}

std::vector<std::size_t> tensor_embedding_indices(std::size_t m, std::size_t n, int r) {
  if (r < 1) throw Error(ErrorCode::IndexOutOfRange, "r must be at least 1");
  const std::size_t width = m * n;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& t : all_tuples(n, static_cast<std::size_t>(r))) {
      std::size_t position = 0;
      for (std::size_t tk : t) position = position * width + (i * n + tk);
      out.push_back(position);
    }
  }
  return out;
}

ComplexMatrix principal_submatrix(const ComplexMatrix& a, const std::vector<std::size_t>& idx) {
  return submatrix(a, idx, idx);
}

}  // namespace imlab
