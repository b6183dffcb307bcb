// Batch experiment runner: one subcommand per verification suite, with
// text or JSON reports.  Exit status 0 means zero violations, 1 means the
// experiment found violations, 2 means a usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prok/derivation_io.hpp"
#include "prok/experiments.hpp"
#include "prok/io.hpp"
#include "prok/report.hpp"
#include "prok/scripts.hpp"

namespace {

using namespace prok;
namespace ex = prok::experiments;

struct Options {
  int n = 0;
  int k = 0;
  int points = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "text";
};

int finish(Report& report, const Options& opt) {
  std::string payload = opt.format == "json" ? report.to_json().dump(2) + "\n"
                                             : report.to_text() + "\n";
  if (opt.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(opt.out);
    if (!f) {
      std::cerr << "cannot open output file: " << opt.out << "\n";
      return 2;
    }
    f << payload;
  }
  return report.pass() ? 0 : 1;
}

int run_lemma32(const Options& opt) {
  Report report("lemma32");
  report.config() = {{"n", opt.n}};
  ex::LevelSweepOutcome out = ex::nilpotency_levels(opt.n);
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : out.levels) {
    levels.push_back({{"n", l.n},
                      {"elements", l.elements},
                      {"pairs", l.total_pairs},
                      {"hypothesis_pairs", l.hypothesis_pairs}});
    if (l.violations > 0)
      report.add_violation({{"n", l.n}, {"violations", l.violations}});
  }
  report.stats() = {{"levels", levels}};
  return finish(report, opt);
}

int run_cor33(const Options& opt) {
  Report report("cor33-quotient");
  report.config() = {{"n", opt.n}};
  ex::QuotientCollapseOutcome out = ex::quotient_collapse(opt.n);
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : out.levels) {
    levels.push_back({{"n", l.n}, {"elements", l.elements}, {"classes", l.classes}});
    if (!l.merged)
      report.add_violation({{"n", l.n}, {"reason", "letter powers not merged"}});
  }
  report.stats() = {{"levels", levels}};
  return finish(report, opt);
}

int run_decider(const Options& opt, bool fully_invariant) {
  Report report(fully_invariant ? "theta4" : "theta3");
  report.config() = {{"samples", opt.samples}, {"seed", opt.seed}};
  ex::DeciderSweepOutcome out = ex::decider_sweep(fully_invariant, opt.samples, opt.seed);
  if (out.violations > 0) report.add_violation({{"count", out.violations}});
  report.stats() = {{"checks", out.checks}};
  return finish(report, opt);
}

int run_cantor(const Options& opt) {
  Report report("cantor-kernel");
  report.config() = {{"samples", opt.samples}, {"seed", opt.seed},
                     {"max_preperiod", 6},     {"max_period", 4}};
  ex::KernelOutcome out = ex::kernel_experiment(6, 4, opt.samples, opt.seed);
  if (out.violations > 0) report.add_violation({{"mismatches", out.violations}});
  report.stats() = {{"exhaustive_pairs", out.exhaustive_pairs},
                    {"sampled_pairs", out.sampled_pairs}};
  return finish(report, opt);
}

int run_check_derivation(const Options& opt, const std::string& path) {
  Report report("check-derivation");
  report.config() = {{"file", path}};
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot open script file: " << path << "\n";
    return 2;
  }
  nlohmann::json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    std::cerr << "cannot parse script file: " << e.what() << "\n";
    return 2;
  }
  DerivationScript script = script_from_json(j);
  CheckReport check = check_derivation(script);
  nlohmann::json limit_notes = nlohmann::json::array();
  for (const auto& step : check.steps) {
    if (step.rule == "limit" && step.ok)
      limit_notes.push_back({{"step", step.index}, {"note", step.note}});
    if (!step.ok)
      report.add_violation(
          {{"step", step.index}, {"rule", step.rule}, {"reason", step.note}});
  }
  report.stats() = {{"script", script.name},
                    {"steps", check.steps.size()},
                    {"limit_steps", limit_notes},
                    {"generators", script.generators.size()}};
  if (check.ok && check.conclusion)
    report.stats()["conclusion"] = {check.conclusion->first.to_string(),
                                    check.conclusion->second.to_string()};
  return finish(report, opt);
}

int run_separation(const Options& opt) {
  Report report("separation");
  report.config() = {{"n_max", opt.n},
                     {"subst_depth", opt.k},
                     {"pairs_each", static_cast<int>(opt.samples)},
                     {"generators", opt.points},
                     {"seed", opt.seed}};
  ex::SeparationOutcome out = ex::separation_experiment(
      opt.n, opt.k, static_cast<int>(opt.samples), opt.points, opt.seed);
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : out.results) {
    nlohmann::json item = {{"x", r.x},
                           {"y", r.y},
                           {"expect_separated", r.expect_separated},
                           {"level", r.level ? nlohmann::json(*r.level) : nlohmann::json()}};
    results.push_back(item);
    if (!r.ok)
      report.add_violation(
          {{"x", r.x}, {"y", r.y}, {"expect_separated", r.expect_separated}});
  }
  if (!out.generator_pair_stays_merged)
    report.add_violation({{"reason", "swap generator pair was separated"}});
  report.stats() = {{"results", results}};
  return finish(report, opt);
}

int run_adjunction(const Options& opt) {
  Report report("adjunction");
  report.config() = {{"points", opt.points}};
  ex::AdjunctionOutcome out = ex::adjunction_experiment(opt.points);
  if (out.disagreements > 0)
    report.add_violation({{"disagreements", out.disagreements}});
  if (out.embedding_failures > 0)
    report.add_violation({{"embedding_failures", out.embedding_failures}});
  if (out.collapse_failures > 0)
    report.add_violation({{"collapse_failures", out.collapse_failures}});
  report.stats() = {{"algebras", out.algebras},
                    {"monoids", out.monoids},
                    {"pairs", out.pairs}};
  return finish(report, opt);
}

int run_collapse(const Options& opt) {
  Report report("collapse");
  report.config() = {{"chain_length", opt.n}, {"max_target_points", opt.points}};
  CollapseReport out = collapse_check(opt.n, opt.points);
  for (const auto& v : out.violations)
    report.add_violation({{"op", v.op},
                          {"seed", v.hom_seed},
                          {"merged", {v.merged_low, v.merged_high}},
                          {"witness", v.witness}});
  report.stats() = {{"algebras", out.algebras}, {"homomorphisms", out.homomorphisms}};
  return finish(report, opt);
}

int run_tower(const Options& opt) {
  Report report("tower");
  ex::TowerOutcome out = ex::tower_experiment();
  if (out.violations > 0) report.add_violation({{"count", out.violations}});
  report.stats() = {{"towers", out.towers},
                    {"separation_histograms", out.histograms}};
  return finish(report, opt);
}

int run_roundtrip(const Options& opt) {
  Report report("polish-roundtrip");
  report.config() = {{"samples", opt.samples}, {"seed", opt.seed}};
  ex::RoundTripOutcome out = ex::roundtrip_experiment(opt.samples, opt.seed);
  if (out.violations > 0)
    report.add_violation({{"roundtrip_or_injectivity_failures", out.violations}});
  report.stats() = {{"roundtrips", out.roundtrips},
                    {"exhaustive_terms", out.exhaustive_terms},
                    {"injective", out.injective},
                    {"error_classes", out.error_classes_ok}};
  return finish(report, opt);
}

int run_counterexample(const Options& opt) {
  Report report("polish-counterexample");
  report.config() = {{"k_max", opt.k}};
  ex::CollisionOutcome out = ex::collision_experiment(opt.k);
  if (out.violations > 0) report.add_violation({{"count", out.violations}});
  report.stats() = {{"instances", out.instances}};
  return finish(report, opt);
}

int run_omega_identity(const Options& opt) {
  Report report("omega-identity");
  report.config() = {{"points", opt.points}};
  ex::OmegaIdentityOutcome out = ex::omega_identity_experiment(opt.points);
  if (out.violations > 0) report.add_violation({{"count", out.violations}});
  report.stats() = {{"monoids", out.monoids}, {"pairs", out.pairs}};
  return finish(report, opt);
}

int run_unary_separation(const Options& opt) {
  Report report("unary-separation");
  report.config() = {{"points", opt.points},
                     {"terms_per_structure", opt.samples},
                     {"seed", opt.seed}};
  ex::UnarySeparationOutcome out =
      ex::unary_separation_experiment(opt.points, opt.samples, opt.seed);
  if (out.violations > 0) report.add_violation({{"count", out.violations}});
  report.stats() = {{"structures", out.structures},
                    {"terms", out.terms},
                    {"separated_pairs", out.separated_pairs}};
  return finish(report, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact experiments on truncated-word semigroups, word congruences, "
               "unary algebras and the Polish codec"};
  app.require_subcommand(1);

  Options opt;
  std::string script_path;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "write the report to this file");
    cmd->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* lemma32 = app.add_subcommand("lemma32", "omega-commuting pairs generate nilpotent "
                                                "subsemigroups at every level");
  lemma32->add_option("--n", opt.n, "largest level")->default_val(6)
      ->check(CLI::Range(2, 8));
  add_common(lemma32);

  auto* cor33 = app.add_subcommand("cor33-quotient",
                                   "quotients by the swapped pair merge the letter powers");
  cor33->add_option("--n", opt.n, "largest level")->default_val(10)
      ->check(CLI::Range(2, 11));
  add_common(cor33);

  auto* theta3 = app.add_subcommand("theta3", "closed-congruence decider property sweep");
  theta3->add_option("--samples", opt.samples)->default_val(10000);
  theta3->add_option("--seed", opt.seed)->default_val(1);
  add_common(theta3);

  auto* theta4 =
      app.add_subcommand("theta4", "fully invariant congruence decider property sweep");
  theta4->add_option("--samples", opt.samples)->default_val(10000);
  theta4->add_option("--seed", opt.seed)->default_val(1);
  add_common(theta4);

  auto* cantor = app.add_subcommand("cantor-kernel",
                                    "binary-expansion kernel against the swap decider");
  cantor->add_option("--samples", opt.samples)->default_val(10000);
  cantor->add_option("--seed", opt.seed)->default_val(1);
  add_common(cantor);

  auto* check = app.add_subcommand("check-derivation", "verify a derivation script file");
  check->add_option("file", script_path, "script JSON file")->required();
  add_common(check);

  auto* separation = app.add_subcommand("separation",
                                        "truncation-level separation of word pairs");
  separation->add_option("--n", opt.n, "largest level")->default_val(12)
      ->check(CLI::Range(1, 14));
  separation->add_option("--k", opt.k, "substitution image depth")->default_val(4)
      ->check(CLI::Range(1, 8));
  separation->add_option("--samples", opt.samples, "pairs per class")->default_val(20);
  separation->add_option("--points", opt.points, "generator family size")->default_val(12);
  separation->add_option("--seed", opt.seed)->default_val(1);
  add_common(separation);

  auto* adjunction = app.add_subcommand("adjunction",
                                        "exhaustive adjunction biconditional sweep");
  adjunction->add_option("--points", opt.points, "largest carrier")->default_val(3)
      ->check(CLI::Range(1, 3));
  add_common(adjunction);

  auto* collapse = app.add_subcommand("collapse",
                                      "merging chain homomorphisms collapse initial segments");
  collapse->add_option("--n", opt.n, "chain length")->default_val(50)
      ->check(CLI::Range(2, 100000));
  collapse->add_option("--points", opt.points, "largest target")->default_val(4)
      ->check(CLI::Range(1, 6));
  add_common(collapse);

  auto* tower = app.add_subcommand("tower", "functoriality and separation along towers");
  add_common(tower);

  auto* roundtrip = app.add_subcommand("polish-roundtrip", "codec round trips and "
                                                           "unique readability");
  roundtrip->add_option("--samples", opt.samples)->default_val(10000);
  roundtrip->add_option("--seed", opt.seed)->default_val(1);
  add_common(roundtrip);

  auto* counterexample = app.add_subcommand("polish-counterexample",
                                            "nested collision terms evaluate apart");
  counterexample->add_option("--k", opt.k, "largest nesting")->default_val(8)
      ->check(CLI::Range(1, 10));
  add_common(counterexample);

  auto* omega = app.add_subcommand("omega-identity",
                                   "idempotent-power word identity over monoid corpus");
  omega->add_option("--points", opt.points, "largest carrier")->default_val(3)
      ->check(CLI::Range(1, 3));
  add_common(omega);

  auto* unary_sep = app.add_subcommand("unary-separation",
                                       "separating structures compute term evaluation");
  unary_sep->add_option("--points", opt.points, "largest carrier")->default_val(3)
      ->check(CLI::Range(1, 4));
  unary_sep->add_option("--samples", opt.samples, "terms per structure")->default_val(1000);
  unary_sep->add_option("--seed", opt.seed)->default_val(1);
  add_common(unary_sep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (lemma32->parsed()) return run_lemma32(opt);
    if (cor33->parsed()) return run_cor33(opt);
    if (theta3->parsed()) return run_decider(opt, false);
    if (theta4->parsed()) return run_decider(opt, true);
    if (cantor->parsed()) return run_cantor(opt);
    if (check->parsed()) return run_check_derivation(opt, script_path);
    if (separation->parsed()) return run_separation(opt);
    if (adjunction->parsed()) return run_adjunction(opt);
    if (collapse->parsed()) return run_collapse(opt);
    if (tower->parsed()) return run_tower(opt);
    if (roundtrip->parsed()) return run_roundtrip(opt);
    if (counterexample->parsed()) return run_counterexample(opt);
    if (omega->parsed()) return run_omega_identity(opt);
    if (unary_sep->parsed()) return run_unary_separation(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
