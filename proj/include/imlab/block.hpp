#pragma once

#include <vector>

#include "imlab/functionals.hpp"
#include "imlab/matrix.hpp"

namespace imlab {

/// An m x m array of n x n blocks. Blocks are the source of truth; flatten()
/// lays block (i, j) at rows [i n, (i+1) n) and columns [j n, (j+1) n).
class BlockMatrix {
 public:
  /// `blocks` in row-major block order, m*m of them, each n x n.
  BlockMatrix(std::size_t m, std::size_t n, std::vector<ComplexMatrix> blocks);
  static BlockMatrix from_flat(const ComplexMatrix& flat, std::size_t m, std::size_t n);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  const ComplexMatrix& block(std::size_t i, std::size_t j) const { return blocks_[i * m_ + j]; }
  const std::vector<ComplexMatrix>& blocks() const noexcept { return blocks_; }

  ComplexMatrix flatten() const;

  friend BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b);
  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<ComplexMatrix> blocks_;
};

/// sum_i A_ii  (n x n)
ComplexMatrix partial_trace_1(const BlockMatrix& a);
/// [tr A_ij]  (m x m)
ComplexMatrix partial_trace_2(const BlockMatrix& a);

/// The n x n block matrix whose (r, s) block collects the (r, s) entries of
/// every block: G_rs = [a^{ij}_rs]_{i,j}. An involution.
BlockMatrix reshuffle(const BlockMatrix& a);

/// [f(G_rs)]_{r,s}  (n x n), computed as partial_function_2(f, reshuffle(A)).
ComplexMatrix partial_function_1(const MatrixFunctional& f, const BlockMatrix& a);
/// [f(A_ij)]_{i,j}  (m x m)
ComplexMatrix partial_function_2(const MatrixFunctional& f, const BlockMatrix& a);

/// Block matrix [tensor_power(A_ij, r)]_{i,j} in M_m(M_{n^r}).
BlockMatrix blockwise_tensor_power(const BlockMatrix& a, int r);

/// Row positions p(i, t_1..t_r) of tensor_power(flatten A, r) realizing the
/// blockwise tensor power as a principal submatrix. The tuple
/// (i, t_1, ..., t_r) with block index i and inner tuple t maps to the tensor
/// coordinate ((i, t_1), ..., (i, t_r)), each factor (i, t) being flat row
/// i n + t of A:
///   p = sum_k (i n + t_k) (m n)^(r - k).
/// Returned in block-matrix row order (i major, t lexicographic).
std::vector<std::size_t> tensor_embedding_indices(std::size_t m, std::size_t n, int r);

ComplexMatrix principal_submatrix(const ComplexMatrix& a, const std::vector<std::size_t>& idx);

}  // namespace imlab
