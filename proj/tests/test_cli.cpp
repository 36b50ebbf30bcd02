#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "milnor/diagram.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = milnor::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MILNOR_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "milnor_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("invariants on the Milnor link file") {
  const Result r = run({"invariants", "--max-length", "3", "--max-r", "1", "--nonzero", data("m3.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("123: 1 (mod 0)") != std::string::npos);
  CHECK(r.out.find(" 12: ") == std::string::npos);
}

TEST_CASE("invariants on a trivial link are zero") {
  const Result r = run({"invariants", "--format", "json", "--max-length", "4", "--max-r", "2",
                        data("trivial3.json")});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK_FALSE(j[0]["rows"].empty());
  for (const auto& row : j[0]["rows"]) CHECK(row["value"] == 0);
}

TEST_CASE("invariants on the Whitehead file") {
  const Result r = run({"invariants", "--max-length", "4", "--max-r", "2", "--nonzero",
                        data("whitehead.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("1122: ") != std::string::npos);
}

TEST_CASE("JSON output is deterministic") {
  const std::vector<std::string> args{"invariants", "--format", "json", "--max-length", "4",
                                      "--max-r", "2", "--jobs", "3", data("whitehead.json"),
                                      data("m3.json")};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> cls{"classify", "--format", "json", data("whitehead.json")};
  CHECK(run(cls).out == run(cls).out);
}

TEST_CASE("classify verdicts") {
  Result r = run({"classify", "--self-delta", data("whitehead.json"), data("trivial2.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("self-delta: No") != std::string::npos);
  r = run({"classify", "--homotopy", data("sigma1sq.json"), data("trivial2.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("not link-homotopic") != std::string::npos);
  r = run({"classify", "--homotopy", data("sigma1sq_string.json"), data("trivial2_string.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("not link-homotopic") != std::string::npos);
  r = run({"classify", "--self-delta", data("trivial3.json"), data("trivial3.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("self-delta: Yes") != std::string::npos);
  r = run({"classify", "--format", "json", data("sigma1sq_string.json")});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["normal_form"][0]["exponent"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == milnor::cli::kUsage);
  CHECK(run({"frobnicate"}).code == milnor::cli::kUsage);
  CHECK(run({"invariants", "--max-length", "1", data("m3.json")}).code == milnor::cli::kUsage);
  CHECK(run({"classify", data("sigma1sq_string.json"), data("trivial2.json")}).code ==
        milnor::cli::kUsage);
  CHECK(run({"--help"}).code == milnor::cli::kSuccess);

  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << "{\"components\": 2,";
  const Result r = run({"invariants", bad.string()});
  CHECK(r.code == milnor::cli::kInvalidInput);
  CHECK(r.err.find(bad.string()) != std::string::npos);
  CHECK(r.err.find("line") != std::string::npos);
  CHECK(run({"invariants", scratch("missing.json").string()}).code == milnor::cli::kInvalidInput);

  CHECK(run({"classify", "--brunnian", "--strict", data("hopf.json")}).code ==
        milnor::cli::kHypothesisNotMet);
  CHECK(run({"classify", "--brunnian", data("hopf.json")}).code == milnor::cli::kSuccess);
  CHECK(run({"classify", "--self-delta", "--strict", data("hopf.json"), data("hopf.json")}).code ==
        milnor::cli::kHypothesisNotMet);
}

TEST_CASE("generate and cable") {
  const fs::path m3 = scratch("m3.json");
  CHECK(run({"generate", "milnor-link", "3", "-o", m3.string()}).code == 0);
  CHECK(read_file(m3) == read_file(data("m3.json")));
  const Result inv = run({"invariants", "--nonzero", m3.string()});
  CHECK(inv.out.find("123: 1 (mod 0)") != std::string::npos);

  const Result v = run({"generate", "v-pi", "1,2,3"});
  CHECK(v.code == 0);
  const auto any = milnor::parse_diagram_json(v.out);
  CHECK(std::holds_alternative<milnor::StringLinkDiagram>(any));
  CHECK(milnor::to_json_text(milnor::as_diagram(any)) == v.out);

  const Result t = run({"generate", "v-tau", "1,2,2", "--k", "3"});
  CHECK(t.code == 0);
  CHECK(run({"generate", "v-pi", "2,1,3"}).code == milnor::cli::kUsage);

  const Result c = run({"generate", "cable", data("hopf.json"), "2,2"});
  CHECK(c.code == 0);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["components"] == 4);
  CHECK(j["source_component"] == nlohmann::json::array({1, 1, 2, 2}));
  const Result c2 = run({"cable", data("hopf.json"), "2,2"});
  CHECK(c2.out == c.out);

  const fs::path cabled = scratch("hopf_cable.json");
  std::ofstream(cabled) << c.out;
  const Result ci = run({"invariants", "--nonzero", "--max-length", "2", cabled.string()});
  CHECK(ci.out.find("13: 1 (mod 0)") != std::string::npos);
  CHECK(ci.out.find("12: ") == std::string::npos);
}
