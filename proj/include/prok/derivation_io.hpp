#pragma once

#include <string>
#include <utility>
#include <variant>

#include <json.hpp>

#include "prok/derivation.hpp"

namespace prok {

namespace detail {

inline nlohmann::json subst_to_json(const Substitution& s) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [c, w] : s) out[std::string(1, c)] = w.to_string();
  return out;
}

inline Substitution subst_from_json(const nlohmann::json& j) {
  Substitution s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key().size() != 1)
      throw std::invalid_argument("substitution keys must be single letters");
    s.emplace(it.key()[0], KWord::parse(it.value().get<std::string>()));
  }
  return s;
}

inline nlohmann::json template_to_json(const PumpTemplate& t) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& a : t.atoms()) {
    nlohmann::json exp;
    switch (a.exp) {
      case PumpExp::One: exp = 1; break;
      case PumpExp::K: exp = "k"; break;
      case PumpExp::Omega: exp = "w"; break;
    }
    atoms.push_back(nlohmann::json::array({a.base, exp}));
  }
  return atoms;
}

inline PumpTemplate template_from_json(const nlohmann::json& j) {
  std::vector<PumpAtom> atoms;
  for (const auto& a : j) {
    PumpAtom atom;
    atom.base = a.at(0).get<std::string>();
    const auto& exp = a.at(1);
    if (exp.is_number()) {
      if (exp.get<int>() != 1)
        throw std::invalid_argument("numeric template exponent must be 1");
      atom.exp = PumpExp::One;
    } else if (exp == "k") {
      atom.exp = PumpExp::K;
    } else if (exp == "w") {
      atom.exp = PumpExp::Omega;
    } else {
      throw std::invalid_argument("template exponent must be 1, \"k\" or \"w\"");
    }
    atoms.push_back(std::move(atom));
  }
  return PumpTemplate(std::move(atoms));
}

}  // namespace detail

inline nlohmann::json to_json(const DerivationScript& script) {
  nlohmann::json j;
  j["name"] = script.name;
  j["generators"] = nlohmann::json::array();
  for (const auto& [l, r] : script.generators)
    j["generators"].push_back({l.to_string(), r.to_string()});
  j["steps"] = nlohmann::json::array();
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    nlohmann::json s;
    const Step& step = script.steps[i];
    if (const auto* g = std::get_if<GeneratorStep>(&step)) {
      s["rule"] = "gen";
      s["gen"] = g->gen;
      if (!g->subst.empty()) s["subst"] = detail::subst_to_json(g->subst);
      if (!g->left.empty()) s["left"] = g->left;
      if (!g->right.empty()) s["right"] = g->right;
    } else if (const auto* d = std::get_if<DerivedStep>(&step)) {
      s["rule"] = "derived";
      s["ref"] = d->ref;
      if (!d->subst.empty()) s["subst"] = detail::subst_to_json(d->subst);
      if (!d->left.empty()) s["left"] = d->left;
      if (!d->right.empty()) s["right"] = d->right;
    } else if (const auto* r = std::get_if<ReflStep>(&step)) {
      s["rule"] = "refl";
      s["word"] = r->word.to_string();
    } else if (const auto* y = std::get_if<SymStep>(&step)) {
      s["rule"] = "sym";
      s["ref"] = y->ref;
    } else if (const auto* t = std::get_if<TransStep>(&step)) {
      s["rule"] = "trans";
      s["refs"] = t->refs;
    } else {
      const auto& lf = std::get<LimitFamilyStep>(step);
      s["rule"] = "limit";
      s["lhs"] = detail::template_to_json(lf.lhs);
      s["rhs"] = detail::template_to_json(lf.rhs);
      s["bound"] = lf.bound;
      s["instances"] = lf.instances;
    }
    if (i < script.claims.size() && script.claims[i])
      s["proves"] = {script.claims[i]->first.to_string(),
                     script.claims[i]->second.to_string()};
    j["steps"].push_back(std::move(s));
  }
  return j;
}

inline DerivationScript script_from_json(const nlohmann::json& j) {
  DerivationScript script;
  script.name = j.value("name", "");
  for (const auto& g : j.at("generators"))
    script.generators.emplace_back(KWord::parse(g.at(0).get<std::string>()),
                                   KWord::parse(g.at(1).get<std::string>()));
  for (const auto& s : j.at("steps")) {
    const std::string rule = s.at("rule").get<std::string>();
    if (rule == "gen") {
      GeneratorStep g;
      g.gen = s.at("gen").get<int>();
      if (s.contains("subst")) g.subst = detail::subst_from_json(s.at("subst"));
      g.left = s.value("left", "");
      g.right = s.value("right", "");
      script.steps.emplace_back(std::move(g));
    } else if (rule == "derived") {
      DerivedStep d;
      d.ref = s.at("ref").get<int>();
      if (s.contains("subst")) d.subst = detail::subst_from_json(s.at("subst"));
      d.left = s.value("left", "");
      d.right = s.value("right", "");
      script.steps.emplace_back(std::move(d));
    } else if (rule == "refl") {
      script.steps.emplace_back(ReflStep{KWord::parse(s.at("word").get<std::string>())});
    } else if (rule == "sym") {
      script.steps.emplace_back(SymStep{s.at("ref").get<int>()});
    } else if (rule == "trans") {
      script.steps.emplace_back(TransStep{s.at("refs").get<std::vector<int>>()});
    } else if (rule == "limit") {
      LimitFamilyStep lf;
      lf.lhs = detail::template_from_json(s.at("lhs"));
      lf.rhs = detail::template_from_json(s.at("rhs"));
      lf.bound = s.at("bound").get<int>();
      lf.instances = s.at("instances").get<std::vector<int>>();
      script.steps.emplace_back(std::move(lf));
    } else {
      throw std::invalid_argument("unknown step rule: " + rule);
    }
    if (s.contains("proves")) {
      const auto& p = s.at("proves");
      script.claims.emplace_back(KPair{KWord::parse(p.at(0).get<std::string>()),
                                       KWord::parse(p.at(1).get<std::string>())});
    } else {
      script.claims.emplace_back(std::nullopt);
    }
  }
  return script;
}

}  // namespace prok
