#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "prok/fin_semigroup.hpp"
#include "prok/kn_semigroup.hpp"
#include "prok/polish.hpp"
#include "prok/unary.hpp"

namespace prok {

inline nlohmann::json to_json(const FinSemigroup& s) {
  return nlohmann::json{{"elements", s.names()}, {"table", s.table()}};
}

inline FinSemigroup fin_semigroup_from_json(const nlohmann::json& j) {
  return FinSemigroup(j.at("elements").get<std::vector<std::string>>(),
                      j.at("table").get<std::vector<std::vector<int>>>());
}

inline nlohmann::json to_json(const KnSemigroup& kn) {
  return nlohmann::json{{"alphabet", kn.alphabet().letters()}, {"n", kn.n()}};
}

inline KnSemigroup kn_semigroup_from_json(const nlohmann::json& j) {
  return KnSemigroup(Alphabet(j.at("alphabet").get<std::string>()), j.at("n").get<int>());
}

inline nlohmann::json to_json(const UnaryAlgebra& u) {
  nlohmann::json ops = nlohmann::json::object();
  for (const auto& [a, f] : u.ops) ops[std::string(1, a)] = f;
  nlohmann::json j{{"size", u.size}, {"ops", ops}};
  if (u.distinguished) j["distinguished"] = *u.distinguished;
  return j;
}

inline UnaryAlgebra unary_algebra_from_json(const nlohmann::json& j) {
  UnaryAlgebra u;
  u.size = j.at("size").get<int>();
  for (auto it = j.at("ops").begin(); it != j.at("ops").end(); ++it) {
    if (it.key().size() != 1)
      throw std::invalid_argument("UnaryAlgebra: letters must be single characters");
    u.ops.emplace(it.key()[0], it.value().get<std::vector<int>>());
  }
  if (j.contains("distinguished")) u.distinguished = j.at("distinguished").get<int>();
  u.validate();
  return u;
}

inline nlohmann::json to_json(const AGenMonoid& m) {
  nlohmann::json gamma = nlohmann::json::object();
  for (const auto& [a, g] : m.gamma) gamma[std::string(1, a)] = g;
  return nlohmann::json{{"table", m.table}, {"identity", m.identity}, {"gamma", gamma}};
}

inline AGenMonoid agen_monoid_from_json(const nlohmann::json& j) {
  AGenMonoid m;
  m.table = j.at("table").get<std::vector<std::vector<int>>>();
  m.identity = j.at("identity").get<int>();
  for (auto it = j.at("gamma").begin(); it != j.at("gamma").end(); ++it) {
    if (it.key().size() != 1)
      throw std::invalid_argument("AGenMonoid: letters must be single characters");
    m.gamma.emplace(it.key()[0], it.value().get<int>());
  }
  m.validate();
  return m;
}

inline nlohmann::json to_json(const Signature& sig) {
  nlohmann::json symbols = nlohmann::json::object();
  for (const auto& [sym, n] : sig.arities()) symbols[std::string(1, sym)] = n;
  return nlohmann::json{{"symbols", symbols}};
}

inline Signature signature_from_json(const nlohmann::json& j) {
  std::map<char, int> arities;
  for (auto it = j.at("symbols").begin(); it != j.at("symbols").end(); ++it) {
    if (it.key().size() != 1)
      throw std::invalid_argument("Signature: symbols must be single characters");
    arities.emplace(it.key()[0], it.value().get<int>());
  }
  return Signature(std::move(arities));
}

}  // namespace prok
