#include <doctest.h>

#include <json.hpp>

#include "dnkit/cli.hpp"

using dnkit::cli::run;
using nlohmann::json;

namespace {

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  return json::parse(run(args).out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes follow the verdict") {
  CHECK(run({"dn", "check", "--n", "2", "--op", "D1.D1"}).exit_code == 0);
  CHECK(run({"dn", "check", "--n", "1", "--op", "D1.D1"}).exit_code == 1);
  CHECK(run({"dn", "check", "--n", "1", "--op", "D0"}).exit_code == 2);
  CHECK(run({"dn", "frobnicate"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"dn", "check", "--n", "9", "--op", "D1"}).exit_code == 2);
  CHECK(run({"--max-n", "9", "dn", "check", "--n", "9", "--op", "D1"}).exit_code == 0);
}

TEST_CASE("separation report") {
  const json j = run_json({"dn", "separation", "--n", "1"});
  CHECK(j["schema"] == 1);
  CHECK(j["verdict"] == "refuted");
  CHECK(j["witness"]["value"] == "2");
  CHECK(j["note"].get<std::string>().find("expected separation") != std::string::npos);
  CHECK(j["defect"] == "2*D1(x)^2");
}

TEST_CASE("coset report") {
  const json free = run_json({"coset", "check", "--funcs", "t,t^2,t^3"});
  CHECK(free["verdict"] == "holds");
  CHECK(free["defect"].is_null());
  const json rel = run_json({"coset", "check", "--funcs", "t,2*t+3"});
  CHECK(rel["verdict"] == "refuted");
  CHECK(rel["defect"] == "f1 - 1/2*f2 = -3/2");
}

TEST_CASE("schema fields") {
  const json j = run_json({"dn", "polarize", "--n", "1", "--op", "D1.D1"});
  for (const char* key : {"schema", "command", "params", "verdict", "defect", "witness", "timing_ms"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["command"] == "dn polarize");
  CHECK(j["params"]["n"] == "1");
  CHECK(j["params"]["op"] == "D1.D1");
  CHECK(j["witness"]["assignments"].is_array());
  CHECK(j["timing_ms"] == 0);
}

TEST_CASE("every subcommand runs") {
  CHECK(run({"dn", "subsum", "--n", "3"}).exit_code == 0);
  CHECK(run({"cover", "preserve", "--n", "2", "--op", "D1.D2"}).exit_code == 0);
  CHECK(run({"cover", "preserve", "--n", "1", "--op", "D1.D1"}).exit_code == 1);
  CHECK(run({"cover", "psi-check"}).exit_code == 0);
  CHECK(run({"cover", "reduct", "--n", "2"}).exit_code == 0);
  CHECK(run({"cover", "ring-check", "--op", "D1"}).exit_code == 0);
  CHECK(run({"cover", "ring-check", "--op", "D1.D1"}).exit_code == 1);
  CHECK(run({"coset", "check", "--funcs", "1/0"}).exit_code == 2);
}

TEST_CASE("degree limit is a flag") {
  CHECK(run({"--max-degree", "3", "dn", "check", "--n", "3", "--op", "D1"}).exit_code == 2);
  CHECK(run({"dn", "check", "--n", "3", "--op", "D1", "--max-degree", "10"}).exit_code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--format", "json", "--seed", "3", "dn", "polarize",
                                      "--n", "1", "--op", "D1.D2 + D2"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> suite{"suite", "--max-n", "2", "--format", "json"};
  CHECK(run(suite).out == run(suite).out);
}

TEST_CASE("help mentions the grammar and targets") {
  const auto top = run({"--help"});
  CHECK(top.exit_code == 0);
  CHECK(top.out.find("D1.D2") != std::string::npos);
  const auto sep = run({"dn", "separation", "--help"});
  CHECK(sep.out.find("D_(n+1)") != std::string::npos);
}

TEST_CASE("text format mirrors the fields") {
  const auto r = run({"dn", "check", "--n", "1", "--op", "D1.D1"});
  CHECK(r.out.find("verdict: refuted") != std::string::npos);
  CHECK(r.out.find("witness: x=0 D1(x)=1 D1.D1(x)=0 -> 2") != std::string::npos);
}

}
