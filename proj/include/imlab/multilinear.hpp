#pragma once

#include <memory>
#include <string_view>

#include "imlab/character.hpp"
#include "imlab/combinatorics.hpp"
#include "imlab/matrix.hpp"
#include "imlab/spectral.hpp"

namespace imlab {

inline constexpr std::size_t kMaxTensorDimension = 4096;
inline constexpr std::size_t kMaxSymmetricPowerDimension = 1024;

/// The (mp) x (nq) matrix whose (i, j) block is a_ij * B.
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

/// r-fold Kronecker power; rows indexed by all_tuples(n, r). n^r <= 4096.
ComplexMatrix tensor_power(const ComplexMatrix& a, int r);

/// r-th multiplicative compound: entry (alpha, beta) = det A[alpha|beta] over
/// increasing_tuples(n, r).
ComplexMatrix compound(const ComplexMatrix& a, int r);

/// r-th symmetric power: entry (alpha, beta) = per A[alpha|beta] /
/// sqrt(mu(alpha) mu(beta)) over nondecreasing_tuples(n, r). C(n+r-1, r) <= 1024.
ComplexMatrix symmetric_power(const ComplexMatrix& a, int r);

enum class PowerKind { Tensor, Wedge, Vee };

std::string_view to_string(PowerKind kind);
PowerKind parse_power_kind(std::string_view text);
ComplexMatrix matrix_power(const ComplexMatrix& a, int r, PowerKind kind);

/// The symmetrizer of a (group, character) pair acting on the n-fold tensor
/// space of a dim_V-dimensional space, plus an orthonormal basis of its range
/// (the symmetry class of tensors).
///
/// `symmetrizer` is the operator
///   S(v_1 x ... x v_n) = (1/|G|) sum_sigma chi(sigma) v_{sigma^-1(1)} x ... x v_{sigma^-1(n)}
/// and `projection` is deg(chi) * S, which is the Hermitian idempotent onto
/// the class for irreducible chi. Tensor coordinates use all_tuples order.
struct SymmetrizerContext {
  std::shared_ptr<const PermutationGroup> group;
  std::shared_ptr<const CharacterFunction> character;
  std::size_t dim_v;
  ComplexMatrix symmetrizer;
  ComplexMatrix projection;
  ComplexMatrix range_basis;  // dim_v^n x rank, orthonormal columns
};

SymmetrizerContext symmetrizer(const CharacterFunction& chi, std::size_t dim_v);
SymmetrizerContext symmetrizer(const PermutationGroup& group, const CharacterFunction& chi,
                               std::size_t dim_v);

/// Matrix of (tensor_power A) restricted to the symmetry class, in the
/// range_basis coordinates. Throws SubspaceNotInvariant if the class is not
/// numerically invariant.
ComplexMatrix induced_operator(const SymmetrizerContext& ctx, const ComplexMatrix& a);

/// (|G| / deg chi) <K(A) e*, e*> with e* = projection(e_1 x ... x e_n); equals
/// the generalized matrix function of A^T. Requires dim_v == degree of G.
Complex gmf_via_induced(const SymmetrizerContext& ctx, const ComplexMatrix& a);

/// Verdict on P(A+B) - P(A) - P(B).
LoewnerVerdict tensor_superadditivity_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                            int r, PowerKind kind, double tol);

/// Verdict on P(A+B+C) + P(A) + P(B) + P(C) - P(A+B) - P(A+C) - P(B+C).
LoewnerVerdict three_matrix_tensor_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                         const ComplexMatrix& c, int r, PowerKind kind,
                                         double tol);

}  // namespace imlab
