#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "imlab/json_io.hpp"

namespace fs = std::filesystem;
using imlab::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "immanant-lab");
  std::ostringstream out, err;
  const int code = imlab::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& file, const std::string& text) const {
    std::ofstream(path / file) << text;
    return (path / file).string();
  }
};

const std::string kFixtures = IMLAB_FIXTURE_DIR;

Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [key, value] : j.items()) value = strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timing(value);
  }
  return j;
}

}  // namespace

TEST_CASE("compute") {
  TempDir dir("imlab_cli_compute");
  CHECK(run({"compute", "det", kFixtures + "/paper_B.json"}).out == "-4 0\n");
  const auto ones = dir.write("ones.json", R"({"rows": 2, "cols": 2, "entries": [1, 1, 1, 1]})");
  CHECK(run({"compute", "per", ones}).out == "2 0\n");
  const auto diag = dir.write("diag.json", R"({"rows": 3, "cols": 3, "entries": [1,0,0, 0,2,0, 0,0,3]})");
  CHECK(run({"compute", "e:2", diag}).out == "11 0\n");
  CHECK(run({"compute", "tr", diag}).out == "6 0\n");
  CHECK(run({"compute", "imm:" + kFixtures + "/s3_standard.json", diag}).out == "12 0\n");
  const auto complex = dir.write("z.json", R"({"rows": 1, "cols": 1, "entries": [[0.5, -2]]})");
  CHECK(run({"compute", "det", complex}).out == "0.5 -2\n");
}

TEST_CASE("compute exit codes") {
  TempDir dir("imlab_cli_codes");
  const auto diag = dir.write("diag.json", R"({"rows": 3, "cols": 3, "entries": [1,0,0, 0,2,0, 0,0,3]})");
  const auto rect = dir.write("rect.json", R"({"rows": 1, "cols": 2, "entries": [1, 2]})");
  const auto broken = dir.write("broken.json", R"({"rows": 1, "cols": 1, "entries": [1)");
  CHECK(run({"compute", "e:4", diag}).code == 3);
  CHECK(run({"compute", "det", rect}).code == 3);
  CHECK(run({"compute", "imm:" + kFixtures + "/s3_standard.json", rect}).code == 3);
  CHECK(run({"compute", "bogus", diag}).code == 2);
  CHECK(run({"compute", "det", broken}).code == 2);
  CHECK(run({"compute", "det", (dir.path / "missing.json").string()}).code == 2);
  CHECK(run({"compute", "det"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify-paper") {
  const Run ok = run({"verify-paper"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("det_B pass") != std::string::npos);

  const Run json = run({"verify-paper", "--json"});
  const Json j = Json::parse(json.out);
  for (const char* check : {"det_B", "det_absC", "absB_psd", "C_psd", "B_not_psd", "absC_not_psd"}) {
    CHECK(j.at(check) == "pass");
  }

  TempDir dir("imlab_cli_corrupt");
  fs::copy_file(kFixtures + "/paper_C.json", dir.path / "paper_C.json");
  dir.write("paper_B.json", R"({"rows": 3, "cols": 3, "entries": [1,0,-1, 0,1,-1, -1,-1,1]})");
  const Run bad = run({"verify-paper", "--fixtures", dir.path.string()});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("det_B") != std::string::npos);
  CHECK(bad.out.find("det_B fail") != std::string::npos);
}

TEST_CASE("suite") {
  const Run small = run({"suite", "--cases", "EEQ0", "--trials", "10", "--n", "2", "--seed", "1", "--json"});
  CHECK(small.code == 0);
  const Json j = Json::parse(small.out);
  CHECK(j["failures"] == 0);
  CHECK(j["cases"].size() == 1);
  CHECK(j["cases"][0]["id"] == "EEQ0");
  CHECK(j["cases"][0]["trials"] == 10);
  CHECK(j["geometry"].is_null());

  const Run empty = run({"suite", "--trials", "0", "--json"});
  CHECK(empty.code == 0);
  const Json e = Json::parse(empty.out);
  CHECK(e["failures"] == 0);
  for (const auto& c : e["cases"]) {
    CHECK(c["trials"] == 0);
    CHECK(c["worst_margin"].is_null());
  }

  CHECK(run({"suite", "--m", "9"}).code == 2);
  CHECK(run({"suite", "--cases", "NOPE"}).code == 2);
  CHECK(run({"suite", "--trials", "-1"}).code == 2);
  // Size 4 drops the functionals that are capped at size 3.
  const Run four = run({"suite", "--cases", "EEQ1", "--n", "4", "--trials", "1", "--json"});
  CHECK(four.code == 0);
  for (const auto& c : Json::parse(four.out)["cases"]) CHECK(c["functional"] != "per");
}

TEST_CASE("suite reports are reproducible") {
  TempDir dir("imlab_cli_repro");
  const auto a = (dir.path / "a.json").string(), b = (dir.path / "b.json").string();
  const std::vector<std::string> args{"suite", "--cases", "EEQ1,THM35_G1,LEM32", "--trials", "15",
                                      "--seed", "42"};
  auto with_out = [&](const std::string& path) {
    auto v = args;
    v.insert(v.end(), {"--out", path});
    return v;
  };
  CHECK(run(with_out(a)).code == 0);
  CHECK(run(with_out(b)).code == 0);
  const Json ja = imlab::read_json_file(a), jb = imlab::read_json_file(b);
  CHECK(strip_timing(ja).dump() == strip_timing(jb).dump());
  CHECK(ja["config"]["seed"] == 42);
}

TEST_CASE("angles") {
  const Run r = run({"angles", "--trials", "60", "--seed", "3", "--json"});
  const Json j = Json::parse(r.out);
  CHECK(j["samples"] == 60);
  CHECK(j["checks"].contains("krein_phi"));
  CHECK(j["checks"]["krein_phi"]["violations"] == 0);
  // Exit status reflects the failing signed gram check.
  CHECK(r.code == (j["violations"] == 0 ? 0 : 1));
}
