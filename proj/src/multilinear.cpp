#include "imlab/multilinear.hpp"

#include <cmath>
#include <string>

#include "imlab/error.hpp"
#include "imlab/functionals.hpp"

namespace imlab {

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  ComplexMatrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) out(i * p + k, j * q + l) = aij * b(k, l);
    }
  }
  return out;
}

namespace {

void check_power(int r) {
  if (r < 1) throw Error(ErrorCode::IndexOutOfRange, "power r must be at least 1");
}

}  // namespace

ComplexMatrix tensor_power(const ComplexMatrix& a, int r) {
  require_square(a, "tensor_power");
  check_power(r);
  std::size_t dim = 1;
  for (int k = 0; k < r; ++k) {
    dim *= a.rows();
    if (dim > kMaxTensorDimension) {
      throw Error(ErrorCode::TooLarge, "tensor power dimension exceeds 4096");
    }
  }
  ComplexMatrix out = a;
  for (int k = 1; k < r; ++k) out = kronecker(out, a);
  return out;
}

ComplexMatrix compound(const ComplexMatrix& a, int r) {
  require_square(a, "compound");
  if (r < 1 || static_cast<std::size_t>(r) > a.rows()) {
    throw Error(ErrorCode::IndexOutOfRange, "compound needs 1 <= r <= n");
  }
  const auto basis = increasing_tuples(a.rows(), static_cast<std::size_t>(r));
  ComplexMatrix out(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      out(i, j) = determinant(submatrix(a, basis[i], basis[j]));
  return out;
}

ComplexMatrix symmetric_power(const ComplexMatrix& a, int r) {
  require_square(a, "symmetric_power");
  check_power(r);
  const std::size_t n = a.rows();
  if (binomial(n + r - 1, r) > kMaxSymmetricPowerDimension) {
    throw Error(ErrorCode::TooLarge, "symmetric power dimension exceeds 1024");
  }
  const auto basis = nondecreasing_tuples(n, static_cast<std::size_t>(r));
  std::vector<double> weight(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    weight[i] = std::sqrt(static_cast<double>(multiplicity_factorial(basis[i])));
  }
  ComplexMatrix out(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      out(i, j) = permanent(submatrix(a, basis[i], basis[j])) / (weight[i] * weight[j]);
  return out;
}

std::string_view to_string(PowerKind kind) {
  switch (kind) {
    case PowerKind::Tensor: return "tensor";
    case PowerKind::Wedge: return "wedge";
    case PowerKind::Vee: return "vee";
  }
  return "?";
}

PowerKind parse_power_kind(std::string_view text) {
  if (text == "tensor") return PowerKind::Tensor;
  if (text == "wedge") return PowerKind::Wedge;
  if (text == "vee") return PowerKind::Vee;
  throw Error(ErrorCode::Parse, "unknown power kind '" + std::string(text) + "'");
}

ComplexMatrix matrix_power(const ComplexMatrix& a, int r, PowerKind kind) {
  switch (kind) {
    case PowerKind::Tensor: return tensor_power(a, r);
    case PowerKind::Wedge: return compound(a, r);
    case PowerKind::Vee: return symmetric_power(a, r);
  }
  throw Error(ErrorCode::Parse, "unknown power kind");
}

namespace {

// Columns of `m` orthonormalized by two-pass modified Gram-Schmidt; columns
// whose residual falls below `drop` times their original norm are skipped.
// Stops after `target` columns.
ComplexMatrix orthonormal_range(const ComplexMatrix& m, std::size_t target) {
  const std::size_t rows = m.rows();
  std::vector<std::vector<Complex>> basis;
  for (std::size_t j = 0; j < m.cols() && basis.size() < target; ++j) {
    std::vector<Complex> v(rows);
    double original = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      v[i] = m(i, j);
      original += std::norm(v[i]);
    }
    if (original == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        Complex dot{};
        for (std::size_t i = 0; i < rows; ++i) dot += std::conj(b[i]) * v[i];
        for (std::size_t i = 0; i < rows; ++i) v[i] -= dot * b[i];
      }
    }
    double residual = 0.0;
    for (const auto& z : v) residual += std::norm(z);
    if (residual <= 1e-16 * original) continue;
    const double inv = 1.0 / std::sqrt(residual);
    for (auto& z : v) z *= inv;
    basis.push_back(std::move(v));
  }
  if (basis.empty()) {
    throw Error(ErrorCode::DegenerateSymmetrizedTensor, "symmetry class is trivial");
  }
  ComplexMatrix out(rows, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < rows; ++i) out(i, k) = basis[k][i];
  return out;
}

}  // namespace

SymmetrizerContext symmetrizer(const CharacterFunction& chi, std::size_t dim_v) {
  const PermutationGroup& group = chi.group();
  const std::size_t n = group.degree();
  if (dim_v == 0) throw Error(ErrorCode::DimensionMismatch, "dim_V must be positive");
  std::size_t dim = 1;
  for (std::size_t k = 0; k < n; ++k) {
    dim *= dim_v;
    if (dim > kMaxTensorDimension) {
      throw Error(ErrorCode::TooLarge, "dim_V^n exceeds 4096");
    }
  }
  const auto tuples = all_tuples(dim_v, n);
  auto flat_index = [&](const IndexTuple& t) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < n; ++k) idx = idx * dim_v + t[k];
    return idx;
  };

  ComplexMatrix raw(dim, dim);
  const double scale = 1.0 / static_cast<double>(group.order());
  IndexTuple image(n);
  for (std::size_t g = 0; g < group.order(); ++g) {
    const Complex weight = chi(g) * scale;
    if (weight == Complex{}) continue;
    const Permutation inv = group.element(g).inverse();
    for (std::size_t col = 0; col < dim; ++col) {
      const IndexTuple& source = tuples[col];
      for (std::size_t k = 0; k < n; ++k) image[k] = source[static_cast<std::size_t>(inv(k))];
      raw(flat_index(image), col) += weight;
    }
  }

  ComplexMatrix projection = raw * Complex(static_cast<double>(chi.degree()));
  const ComplexMatrix squared = projection * projection;
  const double defect = frobenius_norm(squared - projection);
  if (defect > 1e-8 * (1.0 + frobenius_norm(projection))) {
    throw Error(ErrorCode::NotIdempotent,
                "deg(chi) * S is not a projection (||P^2 - P||_F = " + std::to_string(defect) +
                    "); is chi irreducible?");
  }
  const double rank = trace(projection).real();
  const auto target = static_cast<std::size_t>(std::llround(rank));
  ComplexMatrix basis = orthonormal_range(projection, target);

  auto group_ptr = chi.group_ptr();
  return SymmetrizerContext{std::move(group_ptr), std::make_shared<const CharacterFunction>(chi),
                            dim_v, std::move(raw), std::move(projection), std::move(basis)};
}

SymmetrizerContext symmetrizer(const PermutationGroup& group, const CharacterFunction& chi,
                               std::size_t dim_v) {
  if (group.elements() != chi.group().elements()) {
    throw Error(ErrorCode::DegreeMismatch, "character is defined on a different group");
  }
  return symmetrizer(chi, dim_v);
}

ComplexMatrix induced_operator(const SymmetrizerContext& ctx, const ComplexMatrix& a) {
  require_square(a, "induced_operator");
  if (a.rows() != ctx.dim_v) {
    throw Error(ErrorCode::DimensionMismatch, "operator size differs from dim_V");
  }
  const ComplexMatrix big = tensor_power(a, static_cast<int>(ctx.group->degree()));
  const ComplexMatrix& basis = ctx.range_basis;
  const ComplexMatrix image = big * basis;
  const ComplexMatrix basis_h = conjugate_transpose(basis);
  ComplexMatrix compressed = basis_h * image;
  const ComplexMatrix leak = image - basis * compressed;
  const double bound =
      1e-7 * (1.0 + std::pow(frobenius_norm(a), static_cast<double>(ctx.group->degree())));
  if (frobenius_norm(leak) > bound) {
    throw Error(ErrorCode::SubspaceNotInvariant, "symmetry class is not invariant under A");
  }
  return compressed;
}

Complex gmf_via_induced(const SymmetrizerContext& ctx, const ComplexMatrix& a) {
  const std::size_t n = ctx.group->degree();
  if (ctx.dim_v != n) {
    throw Error(ErrorCode::DimensionMismatch, "gmf_via_induced needs dim_V equal to the degree");
  }
  // e_1 x e_2 x ... x e_n sits at tuple (0, 1, ..., n-1).
  std::size_t column = 0;
  for (std::size_t k = 0; k < n; ++k) column = column * n + k;
  const ComplexMatrix& basis = ctx.range_basis;
  std::vector<Complex> coords(basis.cols());
  double norm = 0.0;
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    for (std::size_t i = 0; i < basis.rows(); ++i)
      coords[k] += std::conj(basis(i, k)) * ctx.projection(i, column);
    norm += std::norm(coords[k]);
  }
  if (norm <= 1e-24) {
    throw Error(ErrorCode::DegenerateSymmetrizedTensor, "e* vanishes for this (G, chi)");
  }
  const ComplexMatrix k_a = induced_operator(ctx, a);
  Complex form{};
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j)
      form += std::conj(coords[i]) * k_a(i, j) * coords[j];
  const double factor =
      static_cast<double>(ctx.group->order()) / static_cast<double>(ctx.character->degree());
  return factor * form;
}

LoewnerVerdict tensor_superadditivity_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                            int r, PowerKind kind, double tol) {
  ComplexMatrix diff = matrix_power(a + b, r, kind);
  diff -= matrix_power(a, r, kind);
  diff -= matrix_power(b, r, kind);
  return is_psd(diff, tol);
}

LoewnerVerdict three_matrix_tensor_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                         const ComplexMatrix& c, int r, PowerKind kind,
                                         double tol) {
  ComplexMatrix diff = matrix_power(a + b + c, r, kind);
  diff += matrix_power(a, r, kind);
  diff += matrix_power(b, r, kind);
  diff += matrix_power(c, r, kind);
  diff -= matrix_power(a + b, r, kind);
  diff -= matrix_power(a + c, r, kind);
  diff -= matrix_power(b + c, r, kind);
  return is_psd(diff, tol);
}

}  // namespace imlab
