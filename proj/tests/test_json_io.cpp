#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "imlab/error.hpp"
#include "imlab/json_io.hpp"
#include "imlab/random.hpp"

using namespace imlab;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::NotSquare;
}

}  // namespace

TEST_CASE("matrix json") {
  const auto a = matrix_from_json(Json::parse(R"({"rows": 2, "cols": 2, "entries": [1, [0, 2], -3.5, [4, -1]]})"));
  CHECK(a == ComplexMatrix{{1, Complex(0, 2)}, {-3.5, Complex(4, -1)}});

  Rng rng(81);
  const ComplexMatrix x = random_complex_matrix(3, 2, rng);
  CHECK(matrix_from_json(Json::parse(matrix_to_json(x).dump())) == x);

  CHECK(error_of([] { matrix_from_json(Json::parse(R"({"rows": 2, "cols": 2, "entries": [1]})")); }) ==
        ErrorCode::Parse);
  CHECK(error_of([] { matrix_from_json(Json::parse(R"({"rows": 1, "entries": [1]})")); }) ==
        ErrorCode::Parse);
  CHECK(error_of([] { matrix_from_json(Json::parse(R"({"rows": 1, "cols": 1, "entries": ["x"]})")); }) ==
        ErrorCode::Parse);
  CHECK(error_of([] { matrix_from_json(Json::parse(R"({"rows": 1, "cols": 1, "entries": [[1, 2, 3]]})")); }) ==
        ErrorCode::Parse);
}

TEST_CASE("block and vector json") {
  Rng rng(82);
  const BlockMatrix b = BlockMatrix::from_flat(random_complex_matrix(4, 4, rng), 2, 2);
  CHECK(block_from_json(Json::parse(block_to_json(b).dump())) == b);
  CHECK(error_of([] { block_from_json(Json::parse(R"({"m": 2, "n": 1, "blocks": [[]]})")); }) ==
        ErrorCode::Parse);

  const auto v = vector_from_json(Json::parse(R"({"entries": [[1, 1], 2]})"));
  CHECK(v.entries() == std::vector<Complex>{Complex(1, 1), Complex(2)});
  CHECK(vector_from_json(vector_to_json(v)).entries() == v.entries());
}

TEST_CASE("character tables") {
  const auto by_class = character_from_json(Json::parse(R"({
    "degree": 3, "generators": [[2, 1, 3], [2, 3, 1]],
    "character": {"by": "cycle_type", "values": {"1,1,1": 2, "2,1": 0, "3": -1}}})"));
  CHECK(by_class.group().order() == 6);
  CHECK(by_class.degree() == 2);
  CHECK(verify_character(by_class));

  const auto by_element = character_from_json(Json::parse(R"({
    "degree": 2, "generators": [[2, 1]],
    "character": {"by": "element", "values": {"1,2": 1, "2,1": -1}}})"));
  CHECK(by_element.at(Permutation({1, 0})) == Complex(-1));

  const auto by_partition = character_from_json(Json::parse(R"({
    "degree": 3, "generators": [[2, 1, 3], [2, 3, 1]],
    "character": {"by": "partition", "partition": [2, 1]}})"));
  CHECK(by_partition.values() == by_class.values());

  CHECK(error_of([] {
          character_from_json(Json::parse(R"({"degree": 2, "generators": [[2, 1]],
            "character": {"by": "element", "values": {"1,2": 1}}})"));
        }) == ErrorCode::Parse);
  CHECK(error_of([] {
          character_from_json(Json::parse(R"({"degree": 2, "generators": [[2, 1]],
            "character": {"by": "rows", "values": {}}})"));
        }) == ErrorCode::Parse);
  CHECK(error_of([] {
          character_from_json(Json::parse(R"({"degree": 3, "generators": [[2, 1]],
            "character": {"by": "cycle_type", "values": {}}})"));
        }) == ErrorCode::Parse);
  CHECK(error_of([] {
          character_from_json(Json::parse(R"({"degree": 2, "generators": [[1, 1]],
            "character": {"by": "cycle_type", "values": {}}})"));
        }) == ErrorCode::InvalidPermutation);
}

TEST_CASE("functional specs") {
  CHECK(parse_functional_spec("tr").kind() == FunctionalKind::Trace);
  CHECK(parse_functional_spec("det").kind() == FunctionalKind::Determinant);
  CHECK(parse_functional_spec("per").kind() == FunctionalKind::Permanent);
  CHECK(parse_functional_spec("e:2").index() == 2);
  CHECK(parse_functional_spec("s:3").kind() == FunctionalKind::Complete);
  CHECK(parse_functional_spec("p:1").kind() == FunctionalKind::PowerSum);
  for (const char* bad : {"", "trace", "e:", "e:0", "e:x", "e:2x", "q:2", "imm:"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_functional_spec(bad), Error);
  }

  const auto dir = std::filesystem::temp_directory_path() / "imlab_json_io_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "sign2.json")
      << R"({"degree": 2, "generators": [[2, 1]], "character": {"by": "cycle_type", "values": {"1,1": 1, "2": -1}}})";
  const auto imm = parse_functional_spec("imm:sign2.json", dir);
  CHECK(imm.kind() == FunctionalKind::Immanant);
  CHECK(apply_functional(imm, ComplexMatrix{{1, 2}, {3, 4}}) == Complex(-2));
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports serialize every field") {
  TrialReport r;
  r.inequality = InequalityCase{CaseId::EEQ1, MatrixFunctional::permanent()};
  r.trials = 0;
  const Json j = trial_report_to_json(r);
  for (const char* key : {"id", "functional", "trials", "failures", "worst_margin", "seed"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["worst_margin"].is_null());
  CHECK(j["functional"] == "per");
  CHECK_FALSE(trial_report_to_json(r, false).contains("elapsed_ms"));
}
