#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prok/kword.hpp"
#include "prok/pump.hpp"

namespace prok {

using KPair = std::pair<KWord, KWord>;

/// Instance of a listed generator pair: substitution applied to both sides,
/// then two-sided multiplication by finite words.
struct GeneratorStep {
  int gen = 0;
  Substitution subst;  // empty = identity
  std::string left;
  std::string right;
};

/// Instance of an earlier step's pair under substitution and multipliers.
/// Sound because the congruences checked here are fully invariant.
struct DerivedStep {
  int ref = 0;
  Substitution subst;
  std::string left;
  std::string right;
};

struct ReflStep {
  KWord word;
};

struct SymStep {
  int ref = 0;
};

struct TransStep {
  std::vector<int> refs;
};

/// A k-indexed family of proved pairs together with its limit.  The checker
/// validates that the referenced steps prove exactly (lhs(k), rhs(k)) for
/// k = 1..bound and that both templates converge to their limits; the step
/// then stands for the pair (lim lhs, lim rhs).  Convergence of the family
/// of proofs themselves is not machine-checked beyond the bound.
struct LimitFamilyStep {
  PumpTemplate lhs;
  PumpTemplate rhs;
  int bound = 0;
  std::vector<int> instances;
};

using Step =
    std::variant<GeneratorStep, DerivedStep, ReflStep, SymStep, TransStep, LimitFamilyStep>;

struct DerivationScript {
  std::string name;
  std::vector<KPair> generators;
  std::vector<Step> steps;
  /// Optional declared pair per step; when present the checker verifies it.
  std::vector<std::optional<KPair>> claims;
};

struct StepRecord {
  int index = 0;
  std::string rule;
  bool ok = false;
  std::string note;
  std::optional<KPair> pair;
};

struct CheckReport {
  std::string script;
  bool ok = false;
  std::vector<StepRecord> steps;
  /// Pair proved by the final step, when the script checks.
  std::optional<KPair> conclusion;

  std::vector<KPair> proved_pairs() const {
    std::vector<KPair> out;
    for (const auto& s : steps)
      if (s.ok && s.pair) out.push_back(*s.pair);
    return out;
  }
};

namespace detail {

inline KWord apply_step_transform(const KWord& w, const Substitution& subst,
                                  const std::string& left, const std::string& right) {
  KWord out = subst.empty() ? w : substitute(w, subst);
  if (!left.empty()) out = multiply(KWord::finite(left), out);
  if (!right.empty()) out = multiply(out, KWord::finite(right));
  return out;
}

inline KPair apply_step_transform(const KPair& p, const Substitution& subst,
                                  const std::string& left, const std::string& right) {
  return {apply_step_transform(p.first, subst, left, right),
          apply_step_transform(p.second, subst, left, right)};
}

struct StepFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const KPair& earlier_pair(const std::vector<std::optional<KPair>>& proved, int ref,
                                 int current) {
  if (ref < 0 || ref >= current)
    throw StepFailure("reference to step " + std::to_string(ref) +
                      " is not an earlier step");
  if (!proved[ref]) throw StepFailure("referenced step " + std::to_string(ref) + " failed");
  return *proved[ref];
}

}  // namespace detail

/// Evaluates one step against the pairs proved so far.  Throws StepFailure
/// with a diagnostic when the step does not check.
inline KPair eval_step(const DerivationScript& script,
                       const std::vector<std::optional<KPair>>& proved, int index,
                       std::string* note = nullptr) {
  using detail::StepFailure;
  const Step& step = script.steps.at(index);

  if (const auto* g = std::get_if<GeneratorStep>(&step)) {
    if (g->gen < 0 || g->gen >= static_cast<int>(script.generators.size()))
      throw StepFailure("generator index out of range");
    return detail::apply_step_transform(script.generators[g->gen], g->subst, g->left,
                                        g->right);
  }
  if (const auto* d = std::get_if<DerivedStep>(&step)) {
    const KPair& base = detail::earlier_pair(proved, d->ref, index);
    return detail::apply_step_transform(base, d->subst, d->left, d->right);
  }
  if (const auto* r = std::get_if<ReflStep>(&step)) {
    return {r->word, r->word};
  }
  if (const auto* s = std::get_if<SymStep>(&step)) {
    const KPair& base = detail::earlier_pair(proved, s->ref, index);
    return {base.second, base.first};
  }
  if (const auto* t = std::get_if<TransStep>(&step)) {
    if (t->refs.empty()) throw StepFailure("transitivity over no steps");
    KPair acc = detail::earlier_pair(proved, t->refs[0], index);
    for (std::size_t i = 1; i < t->refs.size(); ++i) {
      const KPair& next = detail::earlier_pair(proved, t->refs[i], index);
      if (acc.second != next.first)
        throw StepFailure("endpoint mismatch in transitivity chain: " +
                          acc.second.to_string() + " vs " + next.first.to_string());
      acc.second = next.second;
    }
    return acc;
  }
  const auto& lf = std::get<LimitFamilyStep>(step);
  if (lf.bound < 1) throw StepFailure("limit family bound must be positive");
  if (static_cast<int>(lf.instances.size()) != lf.bound)
    throw StepFailure("limit family must reference one instance per k = 1..bound");
  for (int k = 1; k <= lf.bound; ++k) {
    const KPair& inst = detail::earlier_pair(proved, lf.instances[k - 1], index);
    KPair expect{lf.lhs.eval(k), lf.rhs.eval(k)};
    if (inst != expect)
      throw StepFailure("instance k=" + std::to_string(k) + " proves (" +
                        inst.first.to_string() + ", " + inst.second.to_string() +
                        ") but the family requires (" + expect.first.to_string() + ", " +
                        expect.second.to_string() + ")");
  }
  if (!check_template_convergence(lf.lhs, static_cast<std::size_t>(lf.bound)) ||
      !check_template_convergence(lf.rhs, static_cast<std::size_t>(lf.bound)))
    throw StepFailure("template does not converge to its declared limit");
  if (note) *note = "validated at " + std::to_string(lf.bound) + " instances";
  return {lf.lhs.limit(), lf.rhs.limit()};
}

inline const char* step_rule_name(const Step& step) {
  if (std::holds_alternative<GeneratorStep>(step)) return "gen";
  if (std::holds_alternative<DerivedStep>(step)) return "derived";
  if (std::holds_alternative<ReflStep>(step)) return "refl";
  if (std::holds_alternative<SymStep>(step)) return "sym";
  if (std::holds_alternative<TransStep>(step)) return "trans";
  return "limit";
}

/// Recomputes every step from the cited generators and earlier steps,
/// verifying declared pairs where present.
inline CheckReport check_derivation(const DerivationScript& script) {
  CheckReport report;
  report.script = script.name;
  report.ok = true;
  std::vector<std::optional<KPair>> proved(script.steps.size());
  for (int i = 0; i < static_cast<int>(script.steps.size()); ++i) {
    StepRecord rec;
    rec.index = i;
    rec.rule = step_rule_name(script.steps[i]);
    try {
      std::string note;
      KPair pair = eval_step(script, proved, i, &note);
      if (i < static_cast<int>(script.claims.size()) && script.claims[i] &&
          *script.claims[i] != pair)
        throw detail::StepFailure("declared pair (" + script.claims[i]->first.to_string() +
                                  ", " + script.claims[i]->second.to_string() +
                                  ") differs from computed pair (" +
                                  pair.first.to_string() + ", " + pair.second.to_string() +
                                  ")");
      proved[i] = pair;
      rec.ok = true;
      rec.note = note;
      rec.pair = pair;
    } catch (const std::exception& e) {
      rec.ok = false;
      rec.note = e.what();
      report.ok = false;
    }
    report.steps.push_back(std::move(rec));
  }
  if (report.ok && !script.steps.empty())
    report.conclusion = proved.back();
  return report;
}

}  // namespace prok
