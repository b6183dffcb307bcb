// End-to-end checks of the command line tool: exit-status contract, report
// determinism, and script-file handling.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cout << "[FAIL] " << what << "\n";
  } else {
    std::cout << "[ok]   " << what << "\n";
  }
}

int run(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

nlohmann::json load_stripped(const std::string& path) {
  std::ifstream f(path);
  nlohmann::json j;
  f >> j;
  j.erase("timings");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_tests <cli-binary> <scripts-dir>\n";
    return 2;
  }
  std::string cli = argv[1];
  std::string scripts = argv[2];

  expect(run(cli + " cantor-kernel --samples 500 --seed 7 --format json --out cli_r1.json") == 0,
         "kernel crosscheck exits 0");
  expect(run(cli + " cantor-kernel --samples 500 --seed 7 --format json --out cli_r2.json") == 0,
         "kernel crosscheck reruns");
  expect(load_stripped("cli_r1.json") == load_stripped("cli_r2.json"),
         "identical seeds give identical reports modulo timings");
  expect(run(cli + " cantor-kernel --samples 500 --seed 8 --format json --out cli_r3.json") == 0,
         "different seed runs");
  expect(load_stripped("cli_r1.json") != load_stripped("cli_r3.json"),
         "different seeds sample differently");

  expect(run(cli + " lemma32 --n 4 --format json --out cli_l.json") == 0,
         "nilpotency sweep exits 0");
  expect(load_stripped("cli_l.json")["result"] == "pass", "sweep reports pass");

  expect(run(cli + " check-derivation " + scripts + "/lemma-4.2-vii.json") == 0,
         "shipped script checks");

  // Tamper with a declared pair: the checker must fail with exit 1.
  {
    std::ifstream f(scripts + "/lemma-4.2-iii.json");
    nlohmann::json j;
    f >> j;
    j["steps"].back()["proves"][1] = "b(a)^w";
    std::ofstream g("cli_tampered.json");
    g << j.dump();
  }
  expect(run(cli + " check-derivation cli_tampered.json") == 1,
         "tampered script fails with exit 1");

  expect(run(cli + " check-derivation cli_missing.json 2>/dev/null") == 2,
         "missing script file is a usage error");
  expect(run(cli + " no-such-command 2>/dev/null") == 2, "unknown command is a usage error");
  expect(run(cli + " lemma32 --n 1 2>/dev/null") == 2, "out-of-range bound is a usage error");

  expect(run(cli + " polish-counterexample --k 3 --format json --out cli_p.json") == 0,
         "collision terms evaluate apart");
  expect(run(cli + " tower") == 0, "towers check");

  // Smoke-test the remaining commands at small bounds.
  expect(run(cli + " cor33-quotient --n 4") == 0, "quotient collapse runs");
  expect(run(cli + " theta3 --samples 300 --seed 3") == 0, "swap decider sweep runs");
  expect(run(cli + " theta4 --samples 300 --seed 3") == 0, "prefix decider sweep runs");
  expect(run(cli + " separation --n 6 --k 3 --samples 3 --seed 2") == 0,
         "separation finds levels at small bounds");
  expect(run(cli + " adjunction --points 2") == 0, "adjunction sweep runs");
  expect(run(cli + " collapse --n 8 --points 3") == 0, "chain collapse runs");
  expect(run(cli + " polish-roundtrip --samples 500 --seed 4") == 0, "codec round trips");
  expect(run(cli + " omega-identity --points 2") == 0, "power identity corpus runs");
  expect(run(cli + " unary-separation --points 2 --samples 100 --seed 5") == 0,
         "separating structures run");

  // The limit-step validation note is surfaced in JSON reports.
  expect(run(cli + " check-derivation " + scripts +
             "/lemma-4.2-i.json --format json --out cli_s.json") == 0,
         "script report is written");
  {
    nlohmann::json j = load_stripped("cli_s.json");
    bool noted = false;
    for (const auto& item : j["stats"]["limit_steps"])
      noted = noted || item["note"].get<std::string>().find("validated at 8") == 0;
    expect(noted, "limit steps carry their instantiation note");
  }

  if (failures == 0) std::cout << "cli_tests: all pass\n";
  return failures == 0 ? 0 : 1;
}
