#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "tiltlab/cli.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/io.hpp"

using namespace tiltlab;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tiltlab_test_" + name);
}

Json read_json(const std::filesystem::path& p) {
  std::ifstream f(p);
  return Json::parse(f);
}

}  // namespace

TEST_CASE("census command") {
  const auto path = scratch("census.json");
  auto r = call({"census", "--family", "A2", "--p", "2", "--json", path.string()});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("3 indecomposables") != std::string::npos);
  const auto j = read_json(path);
  CHECK(j["indecomposables"].size() == 3);
  CHECK(j["homTable"].size() == 3);
  CHECK(call({"census", "--family", "D4"}).out.find("12 indecomposables") != std::string::npos);

  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{\"vertices\": 2, \"arrows\": [[1, 2]";
  r = call({"census", "--quiver", bad.string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("bad-json") != std::string::npos);
}

TEST_CASE("enumerate command") {
  const auto path = scratch("enum.json");
  auto r = call({"enumerate", "--set", "support-tilting", "--family", "A2", "--json", path.string()});
  CHECK(r.code == kExitPass);
  CHECK(read_json(path)["count"] == 5);
  r = call({"enumerate", "--set", "support-tilting", "--family", "A2", "--sincere", "--json", path.string()});
  CHECK(read_json(path)["count"] == 2);
  r = call({"enumerate", "--set", "antichains", "--family", "A1", "--json", path.string()});
  CHECK(read_json(path)["count"] == 2);
  CHECK(call({"enumerate", "--set", "tilting", "--family", "A2"}).code == kExitUsage);
}

TEST_CASE("verify command") {
  const auto path = scratch("verify.json");
  auto r = call({"verify", "--family", "A3", "--p", "2", "--json", path.string()});
  CHECK(r.code == kExitPass);
  const auto j = read_json(path);
  for (int k = 1; k <= 7; ++k) CHECK(j["counts"]["set" + std::to_string(k)] == 14);
  CHECK(j["oracle"]["ran"] == true);
  CHECK(j["pass"] == true);
  CHECK(call({"verify", "--family", "A2", "--p", "3"}).code == kExitPass);

  const auto cyc = scratch("cycle.json");
  std::ofstream(cyc) << R"({"vertices": 2, "arrows": [[1, 2], [2, 1]]})";
  r = call({"verify", "--quiver", cyc.string()});
  CHECK(r.code == kExitUsage);
  const auto diag = Json::parse(r.err);
  CHECK(diag["error"] == "cycle");
  CHECK(diag["witness"] == Json::array({1, 2}));

  const auto kron = scratch("kronecker.json");
  std::ofstream(kron) << R"({"vertices": 2, "arrows": [[1, 2], [1, 2]]})";
  CHECK(call({"verify", "--quiver", kron.string()}).code == kExitUsage);
}

TEST_CASE("table command") {
  const auto path = scratch("table.json");
  auto r = call({"table", "--family", "A", "--max-n", "3", "--json", path.string()});
  CHECK(r.code == kExitPass);
  const auto j = read_json(path);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["total"] == 2);
  CHECK(j["rows"][1]["total"] == 5);
  CHECK(j["rows"][2]["total"] == 14);
  CHECK(j["rows"][1]["byRank"] == Json::array({1, 2, 2}));
  CHECK(call({"table", "--family", "A", "--max-n", "40"}).code == kExitUsage);
  CHECK(call({"table", "--family", "E"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({"census"}).code == kExitUsage);
  CHECK(call({"census", "--family", "A2", "--quiver", "x.json"}).code == kExitUsage);
  CHECK(call({"census", "--family", "A2", "--p", "4"}).code == kExitUsage);
  CHECK(call({"census", "--family", "A3:>><"}).code == kExitUsage);
  CHECK(call({"verify", "--family", "A2", "--oracle", "maybe"}).code == kExitUsage);
  CHECK(call({"--help"}).code == kExitPass);
}

TEST_CASE("output is deterministic") {
  const auto a = scratch("det_a.json"), b = scratch("det_b.json");
  const auto r1 = call({"verify", "--family", "D4:><<", "--json", a.string()});
  const auto r2 = call({"verify", "--family", "D4:><<", "--json", b.string()});
  CHECK(r1.out == r2.out);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
}

TEST_CASE("JSON round trips") {
  const auto q = family_quiver("D4:<><");
  CHECK(quiver_from_json(quiver_to_json(q)) == q);
  const auto c = Census::build(q, 5);
  for (const auto& x : c.indecs()) CHECK(representation_from_json(representation_to_json(x), q, 5) == x);
  CHECK_THROWS_AS(quiver_from_json(Json::parse(R"({"vertices": 2, "arrows": [[1, 3]]})")), InputError);
  CHECK_THROWS_AS(quiver_from_json(Json::parse(R"({"vertices": "two", "arrows": []})")), InputError);
  CHECK_THROWS_AS(representation_from_json(Json::parse(R"({"dims": [1, 1], "mats": {}})"), testsupport::a2(), 2),
                  InputError);
}
