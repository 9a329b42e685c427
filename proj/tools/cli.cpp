#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "imlab/error.hpp"
#include "imlab/functionals.hpp"
#include "imlab/geometry.hpp"
#include "imlab/inequality.hpp"
#include "imlab/json_io.hpp"
#include "imlab/multilinear.hpp"
#include "imlab/random.hpp"
#include "imlab/spectral.hpp"

#ifndef IMLAB_FIXTURE_DIR
#define IMLAB_FIXTURE_DIR "fixtures"
#endif

namespace imlab::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::NonFinite:
    case ErrorCode::InvalidPermutation:
    case ErrorCode::InvalidPartition:
    case ErrorCode::InvalidCharacter:
    case ErrorCode::NotAGroup:
    case ErrorCode::NotSamePartitionSize:
      return kUsageError;
    default:
      return kNotApplicable;
  }
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string format_complex(Complex z) { return format_real(z.real()) + " " + format_real(z.imag()); }

bool write_text(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path);
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

// compute ---------------------------------------------------------------------

struct ComputeOptions {
  std::string functional;
  std::string matrix_file;
};

int cmd_compute(const ComputeOptions& o, std::ostream& out) {
  const MatrixFunctional f = parse_functional_spec(o.functional);
  const ComplexMatrix a = matrix_from_json(read_json_file(o.matrix_file));
  if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "matrix must be square");
  f.check_applicable(a.rows());
  out << format_complex(apply_functional(f, a)) << "\n";
  return kSuccess;
}

// verify-paper ----------------------------------------------------------------

struct VerifyOptions {
  std::string fixtures = IMLAB_FIXTURE_DIR;
  std::uint64_t seed = 1;
  bool json = false;
};

using CheckList = std::vector<std::pair<std::string, bool>>;

bool relative_close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

bool eq6_calibration(std::uint64_t seed) {
  auto s3 = std::make_shared<const PermutationGroup>(PermutationGroup::symmetric(3));
  Rng rng(mix_seed(seed, 6));
  for (const auto& lambda : partitions_of(3)) {
    const auto chi = CharacterFunction::sn_irreducible(s3, lambda);
    const auto ctx = symmetrizer(chi, 3);
    const bool is_sign = lambda == Partition{1, 1, 1};
    for (int k = 0; k < 5; ++k) {
      const ComplexMatrix a = random_complex_matrix(3, 3, rng);
      const Complex via_tensor = gmf_via_induced(ctx, a);
      if (!relative_close(via_tensor, immanant(transpose(a), chi), 1e-7)) return false;
      if (is_sign && !relative_close(via_tensor, determinant(a), 1e-7)) return false;
    }
  }
  return true;
}

bool power_trace_identities(std::uint64_t seed) {
  Rng rng(mix_seed(seed, 21));
  for (int k = 0; k < 6; ++k) {
    const ComplexMatrix a = k % 2 ? random_hermitian(3, rng) : random_complex_matrix(3, 3, rng);
    for (int r : {2, 3}) {
      if (!relative_close(trace(tensor_power(a, r)), std::pow(trace(a), r), 1e-7)) return false;
      if (!relative_close(trace(compound(a, r)), elementary_symmetric(a, r), 1e-7)) return false;
      if (!relative_close(trace(symmetric_power(a, r)), complete_symmetric(a, r), 1e-7)) {
        return false;
      }
    }
  }
  return true;
}

CheckList reference_checks(const VerifyOptions& o) {
  const std::filesystem::path dir(o.fixtures);
  const ComplexMatrix b = matrix_from_json(read_json_file(dir / "paper_B.json"));
  const ComplexMatrix c = matrix_from_json(read_json_file(dir / "paper_C.json"));
  constexpr double kPsdTol = 1e-8;
  auto psd = [&](const ComplexMatrix& m) {
    return m.rows() == m.cols() && is_psd(m, kPsdTol).holds;
  };
  auto det_equals = [](const ComplexMatrix& m, double expected) {
    return m.rows() == m.cols() && std::abs(determinant(m) - Complex(expected)) <= 1e-9;
  };
  return {
      {"det_B", det_equals(b, -4.0)},
      {"det_absC", det_equals(entrywise_abs(c), -364.0)},
      {"absB_psd", psd(entrywise_abs(b))},
      {"C_psd", psd(c)},
      {"B_not_psd", b.rows() == b.cols() && !psd(b)},
      {"absC_not_psd", c.rows() == c.cols() && !psd(entrywise_abs(c))},
      {"eq6_s3", eq6_calibration(o.seed)},
      {"power_traces", power_trace_identities(o.seed)},
  };
}

int cmd_verify_paper(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const CheckList checks = reference_checks(o);
  std::vector<std::string> failed;
  for (const auto& [name, ok] : checks) {
    if (!ok) failed.push_back(name);
  }
  if (o.json) {
    Json j = Json::object();
    for (const auto& [name, ok] : checks) j[name] = ok ? "pass" : "fail";
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [name, ok] : checks) out << name << " " << (ok ? "pass" : "fail") << "\n";
  }
  if (failed.empty()) return kSuccess;
  err << "failed checks:";
  for (const auto& name : failed) err << " " << name;
  err << "\n";
  return kVerificationFailure;
}

// suite -----------------------------------------------------------------------

struct SuiteOptions {
  std::string cases = "all";
  std::size_t trials = 100;
  std::size_t m = 2;
  std::size_t n = 2;
  double tol = kDefaultMarginTolerance;
  std::uint64_t seed = 1;
  std::string out_path;
  bool json = false;
};

constexpr const char* kGeometryCase = "GEOMETRY";

int cmd_suite(const SuiteOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<CaseId> ids;
  bool geometry = false;
  if (o.cases == "all") {
    ids = all_case_ids();
    geometry = true;
  } else {
    std::stringstream ss(o.cases);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (token.empty()) continue;
      if (token == kGeometryCase) {
        geometry = true;
      } else {
        ids.push_back(parse_case_id(token));
      }
    }
  }
  if (!(o.tol >= 0.0)) throw Error(ErrorCode::Parse, "--tol must be nonnegative");

  std::vector<TrialReport> reports;
  try {
    reports = run_suite(cases_for(ids, o.m, o.n), o.trials, o.m, o.n, o.tol, o.seed);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  std::optional<GeometryReport> geo;
  if (geometry) geo = run_geometry_suite(o.trials, o.seed, o.tol);

  std::size_t failures = 0;
  Json cases = Json::array();
  for (const auto& r : reports) {
    failures += r.failures;
    cases.push_back(trial_report_to_json(r));
  }
  if (geo) failures += geo->total_violations();
  const Json report{
      {"config",
       {{"cases", o.cases}, {"trials", o.trials}, {"m", o.m}, {"n", o.n}, {"tol", o.tol},
        {"seed", o.seed}}},
      {"cases", std::move(cases)},
      {"geometry", geo ? geometry_report_to_json(*geo) : Json()},
      {"failures", failures},
      {"passed", failures == 0},
  };
  const std::string text = report.dump(2) + "\n";
  if (!o.out_path.empty() && !write_text(o.out_path, text, err)) return kUsageError;

  if (o.json) {
    out << text;
  } else {
    for (const auto& r : reports) {
      out << r.inequality.label() << " trials=" << r.trials << " failures=" << r.failures
          << " worst_margin="
          << (r.worst_margin ? format_real(*r.worst_margin) : std::string("none")) << "\n";
    }
    if (geo) {
      out << kGeometryCase << " samples=" << geo->samples
          << " violations=" << geo->total_violations() << "\n";
    }
    out << (failures == 0 ? "PASS" : "FAIL") << " failures=" << failures << "\n";
  }
  return failures == 0 ? kSuccess : kVerificationFailure;
}

// angles ----------------------------------------------------------------------

struct AnglesOptions {
  std::size_t trials = 10000;
  double tol = kDefaultMarginTolerance;
  std::uint64_t seed = 1;
  std::string out_path;
  bool json = false;
};

int cmd_angles(const AnglesOptions& o, std::ostream& out, std::ostream& err) {
  if (!(o.tol >= 0.0)) throw Error(ErrorCode::Parse, "--tol must be nonnegative");
  const GeometryReport r = run_geometry_suite(o.trials, o.seed, o.tol);
  const std::string text = geometry_report_to_json(r).dump(2) + "\n";
  if (!o.out_path.empty() && !write_text(o.out_path, text, err)) return kUsageError;
  if (o.json) {
    out << text;
  } else {
    for (const auto& [name, s] : r.checks) {
      out << name << " evaluated=" << s.evaluated << " violations=" << s.violations
          << " worst=" << format_real(s.worst_margin) << "\n";
    }
    out << (r.total_violations() == 0 ? "PASS" : "FAIL")
        << " violations=" << r.total_violations() << "\n";
  }
  return r.total_violations() == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"immanant-lab: generalized matrix functions and their inequalities"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Evaluate a functional on a matrix file");
  c->add_option("functional", compute.functional, "tr | det | per | imm:<file> | p:<r> | e:<r> | s:<r>")
      ->required();
  c->add_option("matrix", compute.matrix_file, "Matrix JSON file")->required();

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify-paper", "Replay the exact checks on the bundled matrices");
  v->add_option("--fixtures", verify.fixtures, "Directory holding paper_B.json and paper_C.json");
  v->add_option("--seed", verify.seed, "Seed for the randomized calibration checks");
  v->add_flag("--json", verify.json, "Print a {check: pass|fail} map");

  SuiteOptions suite;
  auto* s = app.add_subcommand("suite", "Run randomized inequality suites");
  s->add_option("--cases", suite.cases, "Comma-separated case ids, GEOMETRY, or all");
  s->add_option("--trials", suite.trials, "Random instances per case");
  s->add_option("--m", suite.m, "Number of block rows");
  s->add_option("--n", suite.n, "Block size");
  s->add_option("--tol", suite.tol, "Margin tolerance");
  s->add_option("--seed", suite.seed, "Suite seed");
  s->add_option("--out", suite.out_path, "Write the JSON report here");
  s->add_flag("--json", suite.json, "Print the JSON report");

  AnglesOptions angles;
  auto* a = app.add_subcommand("angles", "Sample the inner-product geometry checks");
  a->add_option("--trials", angles.trials, "Number of sampled vector triples");
  a->add_option("--tol", angles.tol, "Margin tolerance");
  a->add_option("--seed", angles.seed, "Sampling seed");
  a->add_option("--out", angles.out_path, "Write the JSON report here");
  a->add_flag("--json", angles.json, "Print the JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out);
    if (v->parsed()) return cmd_verify_paper(verify, out, err);
    if (s->parsed()) return cmd_suite(suite, out, err);
    return cmd_angles(angles, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace imlab::cli
