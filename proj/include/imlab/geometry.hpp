#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "imlab/matrix.hpp"
#include "imlab/spectral.hpp"

namespace imlab {

/// Finite-dimensional complex vector with finite entries.
class ComplexVector {
 public:
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  const std::vector<Complex>& entries() const noexcept { return entries_; }
  Complex operator[](std::size_t i) const { return entries_[i]; }
  double norm() const;

  ComplexVector operator+(const ComplexVector& other) const;
  ComplexVector operator*(Complex s) const;
  /// Entrywise real part.
  ComplexVector real_part() const;

 private:
  std::vector<Complex> entries_;
};

/// <x, y> = conj(y_1) x_1 + ... + conj(y_n) x_n (linear in the first slot).
Complex inner(const ComplexVector& x, const ComplexVector& y);

/// [Re <b, a>] over a, b in (u, v, w): the matrix [Re(a* b)].
ComplexMatrix gram_re(const ComplexVector& u, const ComplexVector& v, const ComplexVector& w);
/// [|a* b|] over a, b in (u, v, w).
ComplexMatrix abs_gram(const ComplexVector& u, const ComplexVector& v, const ComplexVector& w);
/// The full Gram matrix [a* b].
ComplexMatrix gram(const ComplexVector& u, const ComplexVector& v, const ComplexVector& w);

/// Verdict on |A| for a 3x3 PSD A. Throws NotPsdInput when A itself is not
/// PSD at `tol`, and DimensionMismatch for other sizes.
LoewnerVerdict abs_psd_3x3(const ComplexMatrix& a, double tol = 1e-8);

/// [[u.u, u.v, -u.w], [v.u, v.v, v.w], [-w.u, w.v, w.w]] with v = u + w for
/// real u, w.
ComplexMatrix signed_gram(const ComplexVector& u, const ComplexVector& w);
LoewnerVerdict signed_gram_check(const ComplexVector& u, const ComplexVector& w,
                                 double tol = 1e-8);

/// (|u|^2|w|^2 - |<u,w>|^2)(|w|^2|v|^2 - |<w,v>|^2) - |<u,w><w,v> - <u,v><w,w>|^2
double dragomir_margin(const ComplexVector& u, const ComplexVector& v, const ComplexVector& w);

struct UnitTripleMargins {
  double absolute;  // 1 + 2|<u,v>||<v,w>||<w,u>| - (|<u,v>|^2 + |<v,w>|^2 + |<w,u>|^2)
  double real;      // 1 + 2 Re(<u,v><v,w><w,u>) - (same)
};

/// Both three-unit-vector inequalities. Throws NotUnit unless every norm is
/// 1 within 1e-10.
UnitTripleMargins unit_triple_inequalities(const ComplexVector& u, const ComplexVector& v,
                                           const ComplexVector& w);

/// Phi = arccos Re<u,v>/(|u||v|) in [0, pi], Psi = arccos |<u,v>|/(|u||v|) in
/// [0, pi/2]. psi <= phi.
struct AnglePair {
  double phi;
  double psi;
};

/// Computes Phi by the half-chord form 2 atan2(|u^ - v^|, |u^ + v^|) on the
/// normalized vectors, and Psi as Phi(p u, v) with the unimodular minimizer
/// p = conj<u,v>/|<u,v>| (p = 1 when <u,v> = 0).
AnglePair angles(const ComplexVector& u, const ComplexVector& v);

/// arccos of a cosine computed from inner products, clamped into [-1, 1]
/// after checking the overshoot is at most 1e-12.
double angle_from_cosine(double c);
double cos_phi(const ComplexVector& u, const ComplexVector& v);
double cos_psi(const ComplexVector& u, const ComplexVector& v);

/// Named margins (each should be >= 0):
///   krein_phi, triangle_psi           Theta(u,v) <= Theta(u,w) + Theta(w,v)
///   reverse_{phi,psi}                 |Theta(u,v) - Theta(v,w)| <= Theta(u,w)
///   triangle_uw_{phi,psi}             Theta(u,w) <= Theta(u,v) + Theta(v,w)
///   perimeter_{phi,psi}               Theta(u,v) + Theta(v,w) + Theta(w,u) <= 2 pi
///   sine_psi, sine_phi                sin Theta(u,v) <= sin Theta(u,w) + sin Theta(w,v)
///   cosine_chain_psi                  cos Psi(u,v) >= cos(Psi(u,w) + Psi(w,v))
std::map<std::string, double> triangle_checks(const ComplexVector& u, const ComplexVector& v,
                                              const ComplexVector& w);

struct GeometryCheckStats {
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;  // smallest margin relative to its threshold scale
};

struct GeometryReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::map<std::string, GeometryCheckStats> checks;
  std::vector<std::size_t> failing_samples;
  double elapsed_ms = 0.0;

  std::size_t total_violations() const;
};

/// The three vectors of sample `k`: dims cycle through 2..6 and the family
/// cycles through generic complex, real, near-collinear, near-orthogonal,
/// exactly degenerate and unimodular-phase triples (relative perturbation
/// 1e-6 for the adversarial ones).
std::vector<ComplexVector> geometry_sample(std::uint64_t seed, std::size_t k);

/// Every geometric check on `samples` sampled triples at tolerance `tol`.
GeometryReport run_geometry_suite(std::size_t samples, std::uint64_t seed, double tol);

}  // namespace imlab
