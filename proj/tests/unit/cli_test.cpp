#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wat/cli.hpp"

using namespace wat;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(WAT_TEST_DATA) + "/" + name; }

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  return json::parse(run(std::move(args)).out);
}

}  // namespace

TEST_CASE("cli: is-wheeler-dfa prints the order") {
  const Run r = run({"is-wheeler-dfa", data("fig1.aut")});
  CHECK(r.code == kExitPositive);
  CHECK(r.out.find("order: q0<q1<q2<q3<q4<q5") != std::string::npos);
}

TEST_CASE("cli: min-wdfa json report") {
  const json j = run_json({"min-wdfa", data("b3.aut")});
  CHECK(j["command"] == "min-wdfa");
  CHECK(j["verdict"] == "positive");
  CHECK(j["exit_code"] == 0);
  CHECK(j["states"] == 5);
  CHECK(j["automaton"]["order"].size() == 5);
}

TEST_CASE("cli: min-wdfa on a non-Wheeler language") {
  const std::string aa = "alphabet: a\nstates: 2\ninitial: 0\nfinal: 0\ntrans:\n0 a 1\n1 a 0\n";
  const std::string path = (std::filesystem::temp_directory_path() / "wat_cli_aa.aut").string();
  {
    std::ofstream(path) << aa;
  }
  const json j = run_json({"min-wdfa", path});
  std::remove(path.c_str());
  CHECK(j["exit_code"] == kExitNegative);
  CHECK(j["witness"]["mu"] == "ε");
  CHECK(j["witness"]["nu"] == "a");
  CHECK(j["witness"]["gamma"] == "aa");
}

TEST_CASE("cli: intersect-wdfa of the two families") {
  const json j = run_json({"intersect-wdfa", data("a3w.aut"), data("b3w.aut")});
  CHECK(j["states"] == 9);
  CHECK(j["bound"] == 9);
  CHECK(j["empty"] == false);
}

TEST_CASE("cli: family sizes") {
  const json a = run_json({"family", "A", "4"});
  CHECK(a["min_dfa_states"] == 5);
  CHECK(a["min_wdfa_states"] == 9);
  const json b = run_json({"family", "B", "4"});
  CHECK(b["min_dfa_states"] == 5);
  CHECK(b["min_wdfa_states"] == 6);
}

TEST_CASE("cli: gadget report agrees") {
  const json j = run_json({"gadget", "order", data("fig1.aut")});
  CHECK(j["agree"] == true);
  CHECK(j["qe"].is_number());
}

TEST_CASE("cli: usage errors exit 2") {
  const Run unknown = run({"frobnicate"});
  CHECK(unknown.code == kExitInput);
  CHECK(unknown.err.find("unknown subcommand") != std::string::npos);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"min-wdfa"}).code == kExitInput);
  CHECK(run({"min-wdfa", data("missing.aut")}).code == kExitInput);
  CHECK(run({"product", data("fig1.aut"), data("b3.aut")}).code == kExitInput);
}

TEST_CASE("cli: caps exit 3, flags beat the environment") {
  const json j = run_json({"--det-cap", "1", "is-wheeler-lang", data("b3.aut")});
  CHECK(j["exit_code"] == kExitResource);
  CHECK(j["error"]["kind"] == "resource");

  setenv("WAT_DET_CAP", "1", 1);
  CHECK(run({"is-wheeler-lang", data("b3.aut")}).code == kExitResource);
  CHECK(run({"--det-cap", "100", "is-wheeler-lang", data("b3.aut")}).code == kExitPositive);
  unsetenv("WAT_DET_CAP");

  CHECK(run({"--iter-cap", "1", "min-wdfa", data("a3w.aut")}).code == kExitResource);
}
