#include "imlab/json_io.hpp"

#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>

#include "imlab/error.hpp"

namespace imlab {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    parse_error(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

Complex complex_from_json(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  parse_error("expected a number or a [re, im] pair, got " + v.dump());
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::vector<Complex> complex_list(const Json& entries) {
  if (!entries.is_array()) parse_error("\"entries\" must be an array");
  std::vector<Complex> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(complex_from_json(e));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && (*p == ',' || *p == ' ' || *p == '[' || *p == ']')) ++p;
    if (p == end) break;
    int v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc()) parse_error("bad integer list \"" + text + "\"");
    out.push_back(v);
    p = next;
  }
  return out;
}

Permutation one_indexed(std::vector<int> images, std::size_t degree) {
  if (images.size() != degree) {
    parse_error("permutation has " + std::to_string(images.size()) + " images, degree is " +
                std::to_string(degree));
  }
  for (auto& x : images) --x;
  return Permutation(std::move(images));
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  auto entries = complex_list(field(j, "entries"));
  if (entries.size() != rows * cols) {
    parse_error("matrix has " + std::to_string(entries.size()) + " entries, expected " +
                std::to_string(rows * cols));
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

Json matrix_to_json(const ComplexMatrix& a) {
  Json entries = Json::array();
  for (const auto& z : a.entries()) entries.push_back(complex_to_json(z));
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

BlockMatrix block_from_json(const Json& j) {
  const std::size_t m = size_field(j, "m");
  const std::size_t n = size_field(j, "n");
  const Json& rows = field(j, "blocks");
  if (!rows.is_array() || rows.size() != m) parse_error("\"blocks\" must have m rows");
  std::vector<ComplexMatrix> blocks;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != m) parse_error("each block row must have m blocks");
    for (const auto& b : row) blocks.push_back(matrix_from_json(b));
  }
  return BlockMatrix(m, n, std::move(blocks));
}

Json block_to_json(const BlockMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.m(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.m(); ++j) row.push_back(matrix_to_json(a.block(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"m", a.m()}, {"n", a.n()}, {"blocks", std::move(rows)}};
}

ComplexVector vector_from_json(const Json& j) { return ComplexVector(complex_list(field(j, "entries"))); }

Json vector_to_json(const ComplexVector& v) {
  Json entries = Json::array();
  for (const auto& z : v.entries()) entries.push_back(complex_to_json(z));
  return Json{{"entries", std::move(entries)}};
}

CharacterFunction character_from_json(const Json& j) {
  const std::size_t degree = size_field(j, "degree");
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) parse_error("\"generators\" must be an array");
  std::vector<Permutation> generators;
  for (const auto& g : gens) {
    if (!g.is_array()) parse_error("each generator must be an array of images");
    generators.push_back(one_indexed(g.get<std::vector<int>>(), degree));
  }
  auto group = std::make_shared<const PermutationGroup>(
      PermutationGroup::from_generators(degree, generators));

  const Json& chi = field(j, "character");
  const std::string by = field(chi, "by").get<std::string>();
  if (by == "partition") {
    return CharacterFunction::sn_irreducible(group, field(chi, "partition").get<Partition>());
  }
  const Json& values = field(chi, "values");
  if (!values.is_object()) parse_error("\"values\" must be an object");
  if (by == "cycle_type") {
    std::map<CycleType, Complex> table;
    for (const auto& [key, v] : values.items()) {
      table[CycleType{parse_int_list(key)}] = complex_from_json(v);
    }
    return CharacterFunction::from_cycle_types(group, table);
  }
  if (by == "element") {
    std::vector<Complex> per_element(group->order());
    std::vector<bool> seen(group->order(), false);
    for (const auto& [key, v] : values.items()) {
      const std::size_t k = group->index_of(one_indexed(parse_int_list(key), degree));
      if (k == PermutationGroup::npos) parse_error("\"" + key + "\" is not a group element");
      per_element[k] = complex_from_json(v);
      seen[k] = true;
    }
    for (std::size_t k = 0; k < seen.size(); ++k) {
      if (!seen[k]) parse_error("character table misses a group element");
    }
    return CharacterFunction(group, std::move(per_element));
  }
  parse_error("unknown character \"by\": " + by);
}

MatrixFunctional parse_functional_spec(const std::string& spec, const std::filesystem::path& base) {
  if (spec == "tr") return MatrixFunctional::trace();
  if (spec == "det") return MatrixFunctional::determinant();
  if (spec == "per") return MatrixFunctional::permanent();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) parse_error("unknown functional \"" + spec + "\"");
  const std::string head = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (head == "imm") {
    std::filesystem::path path(arg);
    if (path.is_relative() && !base.empty()) path = base / path;
    return MatrixFunctional::immanant(character_from_json(read_json_file(path)),
                                      path.stem().string());
  }
  int r = 0;
  auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), r);
  if (ec != std::errc() || end != arg.data() + arg.size() || r < 1) {
    parse_error("bad index in functional \"" + spec + "\"");
  }
  if (head == "p") return MatrixFunctional::power_sum(r);
  if (head == "e") return MatrixFunctional::elementary(r);
  if (head == "s") return MatrixFunctional::complete(r);
  parse_error("unknown functional \"" + spec + "\"");
}

Json trial_report_to_json(const TrialReport& r, bool include_timing) {
  Json failing = Json::array();
  for (auto t : r.failing_trials) failing.push_back(t);
  Json j{
      {"id", to_string(r.inequality.id)},
      {"label", r.inequality.label()},
      {"functional", r.inequality.functional ? Json(r.inequality.functional->label()) : Json()},
      {"trials", r.trials},
      {"failures", r.failures},
      {"worst_margin", r.worst_margin ? Json(*r.worst_margin) : Json()},
      {"seed", r.seed},
      {"case_seed", r.case_seed},
      {"failing_trials", std::move(failing)},
  };
  if (r.inequality.id == CaseId::LEM32) {
    j["power"] = to_string(r.inequality.power_kind);
    j["r"] = r.inequality.r;
  }
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json geometry_report_to_json(const GeometryReport& r, bool include_timing) {
  Json checks = Json::object();
  for (const auto& [name, s] : r.checks) {
    checks[name] = Json{{"evaluated", s.evaluated},
                        {"violations", s.violations},
                        {"worst_margin", s.evaluated ? Json(s.worst_margin) : Json()}};
  }
  Json j{{"samples", r.samples},
         {"seed", r.seed},
         {"violations", r.total_violations()},
         {"checks", std::move(checks)},
         {"failing_samples", r.failing_samples}};
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace imlab
