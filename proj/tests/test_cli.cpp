#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pr/cli.hpp"
#include "pr/constructive.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = pr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("alpha command") {
  RunResult r = run_cli({"alpha", "--n", "20"});
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");
  RunResult j = run_cli({"alpha", "--n", "20", "--json"});
  json obj = json::parse(j.out);
  CHECK(obj["op"] == "alpha");
  CHECK(obj["n"] == 20);
  CHECK(obj["value"] == 6);
}

TEST_CASE("nstar command") {
  RunResult r = run_cli({"nstar", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");
}

TEST_CASE("bounds json schema") {
  RunResult r = run_cli({"bounds", "--m", "1024", "--n", "1024", "--epsilon", "0.5", "--json"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<json> objs;
  while (std::getline(lines, line)) objs.push_back(json::parse(line));
  REQUIRE(objs.size() == 4);
  CHECK(objs[0]["theorem_tag"] == "blob");
  CHECK(objs[0]["value"] == 1024 * 1024 + 2048);
  CHECK(objs[1]["theorem_tag"] == "qmqn-upper");
  CHECK(objs[1]["value"] == doctest::Approx(1046016.0));
  CHECK(objs[2]["theorem_tag"] == "diamond-diagonal");
  CHECK(objs[3]["theorem_tag"] == "fork-diagonal");
}

TEST_CASE("bounds rejects a failing epsilon condition") {
  RunResult r = run_cli({"bounds", "--m", "4", "--n", "4", "--epsilon", "0.5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("eps") != std::string::npos);
}

TEST_CASE("constants json carries the published values") {
  RunResult r = run_cli({"constants", "--json"});
  REQUIRE(r.code == 0);
  json obj = json::parse(r.out);
  double q = obj["q"];
  CHECK(q > 0.11);
  CHECK(q < 0.111);
  CHECK(std::abs(double(obj["c"]) - 0.2271) < 5e-4);
  CHECK(std::abs(double(obj["d"]) - 1.29) < 5e-3);
  CHECK(double(obj["integral_q"]) <= 0.033);
  CHECK(obj["minimize_ok"] == true);
}

TEST_CASE("witness then verify-coloring round trip") {
  std::string path = "fork2_witness.clr";
  RunResult w = run_cli({"witness", "--kind", "fork", "--n", "2", "--out", path});
  REQUIRE(w.code == 0);

  RunResult red = run_cli({"verify-coloring", "--coloring", path, "--p", "fork:2",
                           "--color", "red"});
  CHECK(red.code == 1);
  CHECK(red.out == "NotFound\n");
  RunResult blue = run_cli({"verify-coloring", "--coloring", path, "--p", "fork:2",
                            "--color", "blue"});
  CHECK(blue.code == 1);

  // the same lattice certainly holds a red single chain
  RunResult chain = run_cli({"verify-coloring", "--coloring", path, "--p", "chain:1",
                             "--color", "red"});
  CHECK(chain.code == 0);
  CHECK(chain.out == "Found\n");
  std::remove(path.c_str());
}

TEST_CASE("witness to stdout matches the library") {
  RunResult w = run_cli({"witness", "--kind", "diamond", "--n", "2"});
  REQUIRE(w.code == 0);
  CHECK(w.out == pr::witness_coloring(pr::WitnessKind::Diamond, 2).to_file_string());
}

TEST_CASE("find-copy prints the embedding") {
  std::string path = "allred.clr";
  {
    std::ofstream f(path, std::ios::binary);
    f << "N=2\nRRRR\n";
  }
  RunResult r = run_cli({"find-copy", "--coloring", path, "--p", "boolean:2", "--color", "red",
                         "--json"});
  REQUIRE(r.code == 0);
  json obj = json::parse(r.out);
  CHECK(obj["result"] == "Found");
  CHECK(obj["map"].size() == 4);
  std::remove(path.c_str());
}

TEST_CASE("ramsey command end to end") {
  std::string path = "ramsey_witness.clr";
  RunResult r = run_cli({"ramsey", "--p", "chain:2", "--q", "chain:2", "--nmax", "4",
                         "--witness-out", path, "--json"});
  REQUIRE(r.code == 0);
  json obj = json::parse(r.out);
  CHECK(obj["op"] == "ramsey");
  CHECK(obj["value"] == 2);
  CHECK(obj["weak"] == false);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "N=1\nRB\n");
  std::remove(path.c_str());

  RunResult weak = run_cli({"ramsey", "--p", "antichain:2", "--q", "antichain:2", "--weak",
                            "--nmax", "4", "--json"});
  REQUIRE(weak.code == 0);
  CHECK(json::parse(weak.out)["weak"] == true);
}

TEST_CASE("construct subcommands emit verified json") {
  RunResult blob = run_cli({"construct", "blob", "--m", "2", "--n", "2", "--oracle", "all-red",
                            "--json"});
  REQUIRE(blob.code == 0);
  json obj = json::parse(blob.out);
  CHECK(obj["construct"] == "blob");
  CHECK(obj["color"] == "red");
  CHECK(obj["verified"] == true);

  RunResult diamond = run_cli({"construct", "diamond", "--n", "2", "--oracle", "layered:2",
                               "--json"});
  REQUIRE(diamond.code == 0);
  CHECK(json::parse(diamond.out)["pattern"] == "diamond:2");

  RunResult weak = run_cli({"construct", "weak", "--n", "8", "--N", "74", "--oracle", "all-red",
                            "--json"});
  REQUIRE(weak.code == 0);
  json wobj = json::parse(weak.out);
  CHECK(wobj["outcome"] == "weak-witness");
  CHECK(wobj["color"] == "red");
  CHECK(wobj["s"] == 1);

  RunResult small = run_cli({"construct", "weak", "--n", "4", "--N", "16", "--oracle", "all-red"});
  CHECK(small.code == 1);
  CHECK(small.err.find("below") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({"alpha"}).code == 2);             // missing --n
  CHECK(run_cli({"frobnicate"}).code == 2);        // unknown subcommand
  CHECK(run_cli({"alpha", "--n", "3", "--wat"}).code == 2);
  CHECK(run_cli({}).code == 2);                    // nothing to do
}

TEST_CASE("version flag") {
  RunResult r = run_cli({"--version"});
  CHECK(r.code == 0);
  CHECK(r.out.find("posetram") != std::string::npos);
  CHECK(r.out.find("coloring-format") != std::string::npos);
}
