#include "imlab/geometry.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "imlab/error.hpp"
#include "imlab/parallel.hpp"
#include "imlab/random.hpp"

namespace imlab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_same_dim(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "vectors have dimensions " +
                                                  std::to_string(a.dim()) + " and " +
                                                  std::to_string(b.dim()));
  }
}

void require_nonzero(const ComplexVector& a) {
  if (a.norm() == 0.0) throw Error(ErrorCode::ZeroVector, "angles need nonzero vectors");
}

// a* b
Complex adjoint_product(const ComplexVector& a, const ComplexVector& b) { return inner(b, a); }

template <class Entry>
ComplexMatrix triple_matrix(const ComplexVector& u, const ComplexVector& v,
                            const ComplexVector& w, Entry entry) {
  require_same_dim(u, v);
  require_same_dim(u, w);
  const ComplexVector* vs[3] = {&u, &v, &w};
  ComplexMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = entry(adjoint_product(*vs[i], *vs[j]));
  return m;
}

ComplexVector normalized(const ComplexVector& a) { return a * Complex(1.0 / a.norm()); }

double chord(const ComplexVector& a, const ComplexVector& b, double sign) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a[i] + sign * b[i]);
  return std::sqrt(s);
}

}  // namespace

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::DimensionMismatch, "vector must be nonempty");
  for (const auto& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::NonFinite, "vector entries must be finite");
    }
  }
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : ComplexVector(std::vector<Complex>(entries)) {}

double ComplexVector::norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexVector ComplexVector::operator+(const ComplexVector& other) const {
  require_same_dim(*this, other);
  std::vector<Complex> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] + other.entries_[i];
  return ComplexVector(std::move(out));
}

ComplexVector ComplexVector::operator*(Complex s) const {
  std::vector<Complex> out(entries_);
  for (auto& z : out) z *= s;
  return ComplexVector(std::move(out));
}

ComplexVector ComplexVector::real_part() const {
  std::vector<Complex> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i].real();
  return ComplexVector(std::move(out));
}

Complex inner(const ComplexVector& x, const ComplexVector& y) {
  require_same_dim(x, y);
  Complex s{};
  for (std::size_t i = 0; i < x.dim(); ++i) s += std::conj(y[i]) * x[i];
  return s;
}

ComplexMatrix gram_re(const ComplexVector& u, const ComplexVector& v, const ComplexVector& w) {
  return triple_matrix(u, v, w, [](Complex z) { return Complex(z.real()); });
}

ComplexMatrix abs_gram(const ComplexVector& u, const ComplexVector& v, const ComplexVector& w) {
  return triple_matrix(u, v, w, [](Complex z) { return Complex(std::abs(z)); });
}

ComplexMatrix gram(const ComplexVector& u, const ComplexVector& v, const ComplexVector& w) {
  return triple_matrix(u, v, w, [](Complex z) { return z; });
}

LoewnerVerdict abs_psd_3x3(const ComplexMatrix& a, double tol) {
  if (a.rows() != 3 || a.cols() != 3) {
    throw Error(ErrorCode::DimensionMismatch, "abs_psd_3x3 needs a 3x3 matrix");
  }
  if (!is_psd(a, tol).holds) throw Error(ErrorCode::NotPsdInput, "input is not PSD");
  return is_psd(entrywise_abs(a), tol);
}

ComplexMatrix signed_gram(const ComplexVector& u, const ComplexVector& w) {
  require_same_dim(u, w);
  const ComplexVector v = u + w;
  auto dot = [](const ComplexVector& a, const ComplexVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i].real() * b[i].real();
    return s;
  };
  const double uu = dot(u, u), uv = dot(u, v), uw = dot(u, w);
  const double vv = dot(v, v), vw = dot(v, w), ww = dot(w, w);
  return ComplexMatrix{{uu, uv, -uw}, {uv, vv, vw}, {-uw, vw, ww}};
}

LoewnerVerdict signed_gram_check(const ComplexVector& u, const ComplexVector& w, double tol) {
  return is_psd(signed_gram(u, w), tol);
}

double dragomir_margin(const ComplexVector& u, const ComplexVector& v, const ComplexVector& w) {
  require_same_dim(u, v);
  require_same_dim(u, w);
  if (w.norm() == 0.0) throw Error(ErrorCode::ZeroVector, "w must be nonzero");
  const double nu = std::norm(u.norm()), nv = std::norm(v.norm()), nw = std::norm(w.norm());
  const Complex uw = inner(u, w), wv = inner(w, v), uv = inner(u, v), ww = inner(w, w);
  const double lhs = (nu * nw - std::norm(uw)) * (nw * nv - std::norm(wv));
  return lhs - std::norm(uw * wv - uv * ww);
}

UnitTripleMargins unit_triple_inequalities(const ComplexVector& u, const ComplexVector& v,
                                           const ComplexVector& w) {
  for (const ComplexVector* x : {&u, &v, &w}) {
    if (std::abs(x->norm() - 1.0) > 1e-10) {
      throw Error(ErrorCode::NotUnit, "inputs must be unit vectors");
    }
  }
  const Complex uv = inner(u, v), vw = inner(v, w), wu = inner(w, u);
  const double squares = std::norm(uv) + std::norm(vw) + std::norm(wu);
  return {1.0 + 2.0 * std::abs(uv) * std::abs(vw) * std::abs(wu) - squares,
          1.0 + 2.0 * (uv * vw * wu).real() - squares};
}

double angle_from_cosine(double c) {
  if (!(std::abs(c) <= 1.0 + 1e-12)) {
    throw Error(ErrorCode::DimensionMismatch,
                "cosine " + std::to_string(c) + " is outside [-1, 1] beyond roundoff");
  }
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double cos_phi(const ComplexVector& u, const ComplexVector& v) {
  require_nonzero(u);
  require_nonzero(v);
  return inner(u, v).real() / (u.norm() * v.norm());
}

double cos_psi(const ComplexVector& u, const ComplexVector& v) {
  require_nonzero(u);
  require_nonzero(v);
  return std::abs(inner(u, v)) / (u.norm() * v.norm());
}

AnglePair angles(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u, v);
  require_nonzero(u);
  require_nonzero(v);
  const ComplexVector uh = normalized(u);
  const ComplexVector vh = normalized(v);
  const double phi = 2.0 * std::atan2(chord(uh, vh, -1.0), chord(uh, vh, 1.0));
  const Complex product = inner(u, v);
  const Complex p = std::abs(product) == 0.0 ? Complex(1.0) : std::conj(product) / std::abs(product);
  const ComplexVector rotated = uh * p;
  const double psi = 2.0 * std::atan2(chord(rotated, vh, -1.0), chord(rotated, vh, 1.0));
  // Psi is the minimum of Phi over unimodular rescalings, so Psi <= Phi;
  // the clamp only absorbs last-bit differences.
  return {phi, std::min(psi, phi)};
}

std::map<std::string, double> triangle_checks(const ComplexVector& u, const ComplexVector& v,
                                              const ComplexVector& w) {
  const AnglePair uv = angles(u, v);
  const AnglePair uw = angles(u, w);
  const AnglePair wv = angles(w, v);
  const AnglePair vw = angles(v, w);
  const AnglePair wu = angles(w, u);

  std::map<std::string, double> out;
  out["krein_phi"] = uw.phi + wv.phi - uv.phi;
  out["triangle_psi"] = uw.psi + wv.psi - uv.psi;

  auto theta_family = [&](const char* suffix, double t_uv, double t_vw, double t_uw,
                          double t_wu) {
    const std::string s(suffix);
    out["reverse_" + s] = t_uw - std::abs(t_uv - t_vw);
    out["triangle_uw_" + s] = t_uv + t_vw - t_uw;
    out["perimeter_" + s] = 2.0 * kPi - (t_uv + t_vw + t_wu);
  };
  theta_family("phi", uv.phi, vw.phi, uw.phi, wu.phi);
  theta_family("psi", uv.psi, vw.psi, uw.psi, wu.psi);

  out["sine_psi"] = std::sin(uw.psi) + std::sin(wv.psi) - std::sin(uv.psi);
  out["sine_phi"] = std::sin(uw.phi) + std::sin(wv.phi) - std::sin(uv.phi);
  out["cosine_chain_psi"] = cos_psi(u, v) - std::cos(uw.psi + wv.psi);
  return out;
}

std::size_t GeometryReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& [name, stats] : checks) total += stats.violations;
  return total;
}

namespace {

ComplexVector gaussian_vector(std::size_t dim, Rng& rng, bool real) {
  std::vector<Complex> e(dim);
  for (auto& z : e) z = real ? Complex(rng.gaussian()) : rng.complex_gaussian();
  return ComplexVector(std::move(e));
}

ComplexVector perturb(const ComplexVector& base, double relative, Rng& rng) {
  const ComplexVector noise = gaussian_vector(base.dim(), rng, false);
  return base + noise * Complex(relative * base.norm() / std::max(noise.norm(), 1e-300));
}

Complex unimodular(Rng& rng) { return std::polar(1.0, 2.0 * kPi * rng.uniform()); }

}  // namespace

std::vector<ComplexVector> geometry_sample(std::uint64_t seed, std::size_t k) {
  Rng rng = Rng(seed).split(k);
  const std::size_t dim = 2 + k % 5;
  constexpr double kNear = 1e-6;
  std::vector<ComplexVector> t;
  switch ((k / 5) % 6) {
    case 0:
      for (int i = 0; i < 3; ++i) t.push_back(gaussian_vector(dim, rng, false));
      break;
    case 1:
      for (int i = 0; i < 3; ++i) t.push_back(gaussian_vector(dim, rng, true));
      break;
    case 2: {
      const ComplexVector u = gaussian_vector(dim, rng, false);
      t.push_back(u);
      t.push_back(perturb(u * unimodular(rng), kNear, rng));
      t.push_back(perturb(u, kNear, rng));
      break;
    }
    case 3: {
      const ComplexMatrix q = random_unitary(dim, rng);
      for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Complex> col(dim);
        for (std::size_t r = 0; r < dim; ++r) col[r] = q(r, i % dim);
        t.push_back(perturb(ComplexVector(std::move(col)), kNear, rng));
      }
      break;
    }
    case 4: {
      const ComplexVector u = gaussian_vector(dim, rng, false);
      const ComplexVector other = gaussian_vector(dim, rng, false);
      switch (k % 3) {
        case 0: t = {u, other, u}; break;                      // w = u
        case 1: t = {u, u, other}; break;                      // u = v
        default: t = {u, other, other * unimodular(rng)}; break;  // w parallel to v
      }
      break;
    }
    default: {
      const ComplexVector u = gaussian_vector(dim, rng, false);
      t = {u * unimodular(rng), u * unimodular(rng), u * unimodular(rng)};
      break;
    }
  }
  // Spread the norms over a few orders of magnitude.
  for (auto& x : t) x = x * Complex(std::exp(2.0 * rng.gaussian()));
  return t;
}

GeometryReport run_geometry_suite(std::size_t samples, std::uint64_t seed, double tol) {
  const auto start = std::chrono::steady_clock::now();
  using Margins = std::vector<std::pair<std::string, double>>;  // margin / threshold
  std::vector<Margins> results(samples);

  parallel_for(samples, [&](std::size_t k) {
    const auto t = geometry_sample(seed, k);
    const ComplexVector &u = t[0], &v = t[1], &w = t[2];
    Margins& out = results[k];
    auto psd = [&](const char* name, const LoewnerVerdict& verdict) {
      out.emplace_back(name, verdict.min_eigenvalue / verdict.tolerance_used);
    };
    psd("gram_re_psd", is_psd(gram_re(u, v, w), tol));
    psd("abs_gram_psd", is_psd(abs_gram(u, v, w), tol));
    psd("signed_gram_psd", signed_gram_check(u.real_part(), w.real_part(), tol));
    psd("abs_psd_3x3_gram", abs_psd_3x3(gram(u, v, w), tol));
    Rng rng = Rng(seed ^ 0x5eedULL).split(k);
    psd("abs_psd_3x3_random", abs_psd_3x3(random_psd(3, rng), tol));

    const double scale = std::norm(u.norm() * v.norm()) * std::pow(w.norm(), 4);
    out.emplace_back("dragomir", dragomir_margin(u, v, w) / (tol * std::max(scale, 1e-300)));

    const auto unit = unit_triple_inequalities(normalized(u), normalized(v), normalized(w));
    out.emplace_back("unit_abs", unit.absolute / tol);
    out.emplace_back("unit_real", unit.real / tol);
    out.emplace_back("unit_abs_dominates_real", (unit.absolute - unit.real) / tol);

    for (const auto& [a, b] : {std::pair{&u, &v}, std::pair{&v, &w}, std::pair{&w, &u}}) {
      const AnglePair ap = angles(*a, *b);
      out.emplace_back("psi_le_phi", (ap.phi - ap.psi) / tol);
    }
    for (const auto& [name, margin] : triangle_checks(u, v, w)) {
      out.emplace_back(name, margin / tol);
    }
  });

  GeometryReport report;
  report.samples = samples;
  report.seed = seed;
  for (std::size_t k = 0; k < samples; ++k) {
    bool failed = false;
    for (const auto& [name, ratio] : results[k]) {
      auto& stats = report.checks[name];
      if (stats.evaluated == 0 || ratio < stats.worst_margin) stats.worst_margin = ratio;
      ++stats.evaluated;
      // ratio is margin / threshold: the check fails below -1.
      if (!(ratio >= -1.0)) {
        ++stats.violations;
        failed = true;
      }
    }
    if (failed) report.failing_samples.push_back(k);
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace imlab
