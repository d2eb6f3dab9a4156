#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "designs/json_io.hpp"

using namespace designs;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the binary with stdout+stderr captured; args are appended as-is.
RunResult run(const std::string& args, const std::string& env = "") {
  const std::string path = "cli_out.txt";
  const std::string cmd =
      env + (env.empty() ? "" : " ") + CLI_BINARY + " " + args + " > " + path +
      " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WEXITSTATUS(raw);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("enumerate prints the count") {
  const RunResult r = run("enumerate --n 7 --big C4");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "|K_7(C4)| = 105"));
}

TEST_CASE("sample reports the profile and honors --lambda") {
  const RunResult ok = run("sample --n 14 --big K3 --small K2");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "364 blocks onto 91 targets: regular(4)"));

  const RunResult none = run("sample --n 6 --big K3 --small K2");
  CHECK(none.code == 1);
  CHECK(contains(none.out, "nonexistence: no regular sampling: 20 = 1*15 + 5"));

  const RunResult mismatch = run("sample --n 14 --big K3 --small K2 --lambda 5");
  CHECK(mismatch.code == 1);
  CHECK(contains(mismatch.out, "the counts force 4"));

  const RunResult pinned = run("sample --n 14 --big K3 --small K2 --lambda 4");
  CHECK(pinned.code == 0);
}

TEST_CASE("bad input exits with code two") {
  CHECK(run("sample --n 7 --big X9 --small K2").code == 2);
  CHECK(run("").code == 2);              // a subcommand is required
  CHECK(run("sample --frobnicate").code == 2);
  CHECK(run("enumerate --n 7 --big C4", "DESIGN_SAMPLER_MAX_N=5").code == 2);
  CHECK(run("enumerate --n 7 --big C4", "DESIGN_SAMPLER_MAX_N=40").code == 0);
}

TEST_CASE("written samplings verify and rewrite byte for byte") {
  const RunResult w1 = run("sample --n 7 --big C4 --small P3 -o cli_s1.json");
  CHECK(w1.code == 0);
  CHECK(contains(w1.out, "wrote cli_s1.json"));
  const RunResult v = run("verify --sampling cli_s1.json");
  CHECK(v.code == 0);
  CHECK(contains(v.out, "sampling valid: regular(1)"));

  const RunResult w2 = run("sample --n 7 --big C4 --small P3 -o cli_s2.json");
  CHECK(w2.code == 0);
  CHECK(slurp("cli_s1.json") == slurp("cli_s2.json"));

  // Redirect one block onto target 0; the map stops being surjective.
  json j = load_json("cli_s1.json");
  j["assignment"][0] = 0;
  j["assignment"][1] = 0;
  save_json(j, "cli_tampered.json");
  const RunResult bad = run("verify --sampling cli_tampered.json");
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "invalid"));

  std::remove("cli_s1.json");
  std::remove("cli_s2.json");
  std::remove("cli_tampered.json");
}

TEST_CASE("verify understands the other shapes") {
  const RunResult e = run("embed --n 5 --small K2 --big K3 -o cli_e.json");
  CHECK(e.code == 0);
  CHECK(contains(e.out, "regular(1), strict"));
  const RunResult ve = run("verify --in cli_e.json");
  CHECK(ve.code == 0);
  CHECK(contains(ve.out, "embedding valid"));
  std::remove("cli_e.json");

  save_json(to_json(complete_design(5, complete_graph(2))), "cli_bs.json");
  const RunResult vb = run("verify --in cli_bs.json");
  CHECK(vb.code == 0);
  CHECK(contains(vb.out, "block set valid"));
  std::remove("cli_bs.json");

  save_json(json::object({{"shape", "mystery"}}), "cli_junk.json");
  CHECK(run("verify --in cli_junk.json").code == 2);
  std::remove("cli_junk.json");
}

TEST_CASE("compose chains two written samplings") {
  CHECK(run("sample --n 11 --big K4 --small K3 -o cli_a.json").code == 0);
  CHECK(run("sample --n 11 --big K3 --small K2 -o cli_b.json").code == 0);
  const RunResult c = run("compose --in cli_a.json --in cli_b.json -o cli_c.json");
  CHECK(c.code == 0);
  CHECK(contains(c.out, "330 blocks onto 55 targets: regular(6)"));
  CHECK(run("verify --sampling cli_c.json").code == 0);

  const RunResult wrong = run("compose --in cli_b.json --in cli_a.json");
  CHECK(wrong.code == 2);
  std::remove("cli_a.json");
  std::remove("cli_b.json");
  std::remove("cli_c.json");
}

TEST_CASE("semiregular and starter subcommands") {
  const RunResult s = run("semiregular --n 6 --big K3 --small K2");
  CHECK(s.code == 0);
  CHECK(contains(s.out, "semiregular(1,2)"));

  const RunResult t = run("starter --n 14");
  CHECK(t.code == 0);
  CHECK(contains(t.out, "triple starter n=14: lambda=4, v=7"));
  CHECK(contains(t.out, "T4^2"));
  CHECK(contains(t.out, "lift check: regular(4)"));

  CHECK(run("starter --n 6").code == 2);
}

TEST_CASE("lift runs a rule file through a group") {
  // Rule: triple {0,l,m} -> pair {0,l}, one row per Z_5 triple orbit.
  std::vector<RepAssignment> rule = {
      {subset_block(5, {0, 1, 2}), subset_block(5, {0, 1})},
      {subset_block(5, {0, 2, 3}), subset_block(5, {0, 2})},
  };
  save_json(rule_to_json(rule), "cli_rule.json");
  const RunResult r = run(
      "lift --n 5 --group cyclic --big K3 --small K2 --in cli_rule.json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "redundancy 1"));
  std::remove("cli_rule.json");
}

TEST_CASE("orbit listings") {
  const RunResult r = run("orbits --n 7 --group affine --big P3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "group affine degree 7 order 21"));
  CHECK(contains(r.out, "orbits: 5, semiregular: yes"));
  CHECK(contains(r.out, "orbit 0: size 21 stab 1 rep {0-1 0-2}"));
}

TEST_CASE("nesting search over a cycle system file") {
  CycleSystem cs;
  cs.n = 7;
  cs.m = 3;
  for (int i = 0; i < 7; ++i)
    cs.cycles.push_back(cycle_block(7, {i, (i + 1) % 7, (i + 3) % 7}));
  save_json(to_json(cs), "cli_sts7.json");

  const RunResult found = run("nest --in cli_sts7.json -o cli_nested.json");
  CHECK(found.code == 0);
  CHECK(contains(found.out, "nesting found"));
  const RunResult v = run("verify --in cli_nested.json");
  CHECK(v.code == 0);
  CHECK(contains(v.out, "nesting valid"));

  const RunResult cut = run("nest --in cli_sts7.json --budget 3");
  CHECK(cut.code == 2);
  CHECK(contains(cut.out, "budget"));
  std::remove("cli_sts7.json");
  std::remove("cli_nested.json");

  CycleSystem tiny;
  tiny.n = 3;
  tiny.m = 3;
  tiny.cycles.push_back(cycle_block(3, {0, 1, 2}));
  save_json(to_json(tiny), "cli_tiny.json");
  const RunResult none = run("nest --in cli_tiny.json");
  CHECK(none.code == 1);
  CHECK(contains(none.out, "no nesting exists"));
  std::remove("cli_tiny.json");
}
