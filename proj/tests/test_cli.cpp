#include <doctest.h>

#include <sstream>
#include <vector>

#include "xw/cli.hpp"

namespace {

struct cli_result {
  int code;
  std::string out;
  std::string err;
};

cli_result run_cli(std::vector<const char*> args, const std::string& stdin_text = {}) {
  args.insert(args.begin(), "xw");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = xw::cli::run(static_cast<int>(args.size()), args.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli usage errors exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"graph", "--stage", "nonsense"}, "...").code == 2);
  CHECK(run_cli({"validate", "/no/such/file"}).code == 2);
}

TEST_CASE("cli help exits 0") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("validate") != std::string::npos);
}

TEST_CASE("cli validate") {
  CHECK(run_cli({"validate"}, "...\n...\n...\n").code == 0);
  auto r = run_cli({"validate"}, ".....\n.....\n..#..\n.....\n.....\n");
  CHECK(r.code == 1);
  CHECK(r.out.find("AnswerLength: FAIL") != std::string::npos);

  auto j = run_cli({"validate", "--format", "json"}, "...\n...\n...\n");
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["valid"] == true);

  // Grid input in json form is accepted too.
  auto from_json = run_cli({"validate"}, R"({"n":1,"voids":[]})");
  CHECK(from_json.code == 0);

  // Malformed grid text is a parse error.
  CHECK(run_cli({"validate"}, "..\n..\n").code == 2);
}

TEST_CASE("cli answers") {
  auto r = run_cli({"answers"}, "...\n...\n...\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("across row 1 length 3") != std::string::npos);
  auto j = run_cli({"answers", "--format", "json"}, "...\n...\n...\n");
  CHECK(nlohmann::json::parse(j.out).size() == 6);
}

TEST_CASE("cli graph stages") {
  const std::string grid5 = ".....\n.....\n.....\n.....\n.....\n";
  auto r = run_cli({"graph", "--stage", "multigraph", "--format", "json"}, grid5);
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["A"].size() == 3);
  CHECK(j["B"].size() == 3);
  CHECK(j["edges"].size() == 13);

  auto licn = run_cli({"graph", "--stage", "licn", "--format", "json"}, grid5);
  CHECK(nlohmann::json::parse(licn.out)["edges"].size() == 25);

  auto dot = run_cli({"graph", "--stage", "voided", "--format", "dot"}, grid5);
  CHECK(dot.out.find("graph bit_multigraph") != std::string::npos);

  auto fund = run_cli({"graph", "--stage", "fundamental", "--format", "json"}, grid5);
  CHECK(nlohmann::json::parse(fund.out)["edges"].size() == 13);

  // Asymmetric grids cannot be graphed.
  CHECK(run_cli({"graph"}, "..#\n...\n...\n").code == 1);
}

TEST_CASE("cli graph then reconstruct is the identity") {
  const std::string grid5 = "....#\n.....\n.....\n.....\n#....\n";
  auto g = run_cli({"graph", "--stage", "multigraph", "--format", "json"}, grid5);
  REQUIRE(g.code == 0);
  auto back = run_cli({"reconstruct"}, g.out);
  REQUIRE(back.code == 0);
  CHECK(back.out == grid5);

  auto voided = run_cli({"graph", "--stage", "voided", "--format", "json"}, grid5);
  auto back2 = run_cli({"reconstruct"}, voided.out);
  CHECK(back2.out == grid5);
}

TEST_CASE("cli void traces rules") {
  auto r = run_cli({"void", "--n", "2", "2,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3a-i") != std::string::npos);
  CHECK(r.out.find("\"2.0\"") != std::string::npos);

  auto j = run_cli({"void", "--n", "2", "--format", "json", "2,2", "1,2"});
  REQUIRE(j.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["steps"].size() == 2);
  CHECK(parsed["graph"]["edges"].size() == 11);

  // Voiding the same cell twice is an operation failure.
  CHECK(run_cli({"void", "--n", "2", "2,2", "2,2"}).code == 1);
  // Bad cell syntax is a parse error.
  CHECK(run_cli({"void", "--n", "2", "x"}).code == 2);
}

TEST_CASE("cli check") {
  auto good = run_cli({"graph", "--stage", "voided", "--format", "json"},
                      "....#\n.....\n.....\n.....\n#....\n");
  REQUIRE(good.code == 0);
  auto pass = run_cli({"check"}, good.out);
  CHECK(pass.code == 0);
  CHECK(pass.out.find("overall: pass") != std::string::npos);

  // A degree-2 vertex fails the word-length condition.
  nlohmann::json bad{{"A", {"0", "1"}},
                     {"B", {"0", "1"}},
                     {"edges",
                      {{{"a", "1"}, {"b", "1"}, {"label", "+"}},
                       {{"a", "1"}, {"b", "1"}, {"label", "-"}},
                       {{"a", "0"}, {"b", "0"}, {"label", "0"}}}}};
  auto fail = run_cli({"check", "--format", "json"}, bad.dump());
  CHECK(fail.code == 1);
  nlohmann::json rep = nlohmann::json::parse(fail.out);
  CHECK(rep["overall"] == false);
  CHECK(rep["conditions"]["C2_WordLength"]["verdict"] == "fail");
}

TEST_CASE("cli canonical") {
  nlohmann::json g{{"A", {"0", "1.0110", "1.10"}},
                   {"B", {"0", "1"}},
                   {"edges", {{{"a", "1.10"}, {"b", "1"}, {"label", "+"}}}}};
  auto r = run_cli({"canonical"}, g.dump());
  REQUIRE(r.code == 0);
  nlohmann::json canon = nlohmann::json::parse(r.out);
  CHECK(canon["A"] == nlohmann::json({"0", "1.0", "1.1"}));
  // Idempotent through the CLI as well.
  auto again = run_cli({"canonical"}, r.out);
  CHECK(nlohmann::json::parse(again.out) == canon);

  // Stripping drops the isolated vertices, the zero vertices among them.
  auto stripped = run_cli({"canonical", "--strip-isolated"}, g.dump());
  CHECK(nlohmann::json::parse(stripped.out)["A"] == nlohmann::json({"1"}));
  CHECK(nlohmann::json::parse(stripped.out)["B"] == nlohmann::json({"1"}));
}

TEST_CASE("cli count") {
  auto r = run_cli({"count", "--n", "2"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["valid_grids"] == 12);
  CHECK(j["masks"] == 8192);

  CHECK(run_cli({"count", "--n", "4"}).code == 1);  // beyond the default limit

  auto sampled = run_cli({"count", "--n", "3", "--sample", "200", "--seed", "5"});
  CHECK(sampled.code == 0);
  CHECK(nlohmann::json::parse(sampled.out)["sample"] == 200);
}

TEST_CASE("cli experiments") {
  auto necessity = run_cli({"experiment", "necessity", "--n", "1"});
  CHECK(necessity.code == 0);
  nlohmann::json nj = nlohmann::json::parse(necessity.out);
  CHECK(nj["valid_grids"] == 1);
  CHECK(nj["mismatches"].empty());

  auto sufficiency = run_cli({"experiment", "sufficiency", "--n", "1"});
  CHECK(sufficiency.code == 0);
  nlohmann::json sj = nlohmann::json::parse(sufficiency.out);
  CHECK(sj["total_examined"] == 32);

  auto roundtrip = run_cli({"experiment", "roundtrip", "--n", "2"});
  CHECK(roundtrip.code == 0);
  CHECK(nlohmann::json::parse(roundtrip.out)["examined"] == 12);

  CHECK(run_cli({"experiment", "bogus", "--n", "1"}).code == 2);
}
