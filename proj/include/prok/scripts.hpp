#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prok/derivation.hpp"

namespace prok {

/// Incremental script construction.  Every appended step is evaluated with
/// the same logic the checker uses, so malformed derivations fail fast and
/// each step's declared pair is recorded in the script.
class ScriptBuilder {
 public:
  explicit ScriptBuilder(std::string name) { script_.name = std::move(name); }

  int add_generator(KWord lhs, KWord rhs) {
    script_.generators.emplace_back(std::move(lhs), std::move(rhs));
    return static_cast<int>(script_.generators.size()) - 1;
  }

  int gen(int g, Substitution subst = {}, std::string left = "", std::string right = "") {
    return push(GeneratorStep{g, std::move(subst), std::move(left), std::move(right)});
  }
  int derived(int ref, Substitution subst = {}, std::string left = "",
              std::string right = "") {
    return push(DerivedStep{ref, std::move(subst), std::move(left), std::move(right)});
  }
  int refl(KWord w) { return push(ReflStep{std::move(w)}); }
  int sym(int ref) { return push(SymStep{ref}); }
  int trans(std::vector<int> refs) { return push(TransStep{std::move(refs)}); }
  int limit(PumpTemplate lhs, PumpTemplate rhs, int bound, std::vector<int> instances) {
    return push(LimitFamilyStep{std::move(lhs), std::move(rhs), bound, std::move(instances)});
  }

  const KPair& pair_of(int step) const { return *proved_.at(step); }

  DerivationScript take() { return std::move(script_); }

 private:
  int push(Step step) {
    script_.steps.push_back(std::move(step));
    int index = static_cast<int>(script_.steps.size()) - 1;
    KPair pair = eval_step(script_, proved_, index);
    proved_.push_back(pair);
    script_.claims.push_back(pair);
    return index;
  }

  DerivationScript script_;
  std::vector<std::optional<KPair>> proved_;
};

namespace scripts {

inline Substitution swap_ab() {
  return {{'a', KWord::finite("b")}, {'b', KWord::finite("a")}};
}

inline Substitution subst(const std::string& ia, const std::string& ib) {
  return {{'a', KWord::parse(ia)}, {'b', KWord::parse(ib)}};
}

inline std::string rep(const std::string& w, int k) {
  std::string out;
  for (int i = 0; i < k; ++i) out += w;
  return out;
}

/// The defining relation family: pair n is (a b^n a b^w, a b^{n+1} a^w).
inline KPair relation_pair(int n) {
  return {KWord::omega("a" + rep("b", n) + "a", "b"),
          KWord::omega("a" + rep("b", n + 1), "a")};
}

constexpr int kLimitBound = 8;

namespace detail {

// Indices of shared intermediate results inside one builder.
struct Blocks {
  std::map<int, int> gens;  // relation index n -> generator slot
  std::map<std::pair<int, int>, int> edges;
  std::map<int, int> links;
  int first = -1;    // (a b^3 a^w, a b^w) direction: (ab^w, ab^3 a^w) limit step
  int second = -1;   // (ab^w, (ab^2)^w)
  int third = -1;    // ((ab)^2 a^w, (ab)^w)
  int fourth = -1;   // ((ab)^w, (aba)^w)
  int fifth = -1;    // ((aba)^w, aba^w)
  int sixth = -1;    // ((ab)^w, aba^w)
  int seventh = -1;  // (ab^w, aba^w)
};

inline int need_gen(ScriptBuilder& b, Blocks& bl, int n) {
  auto it = bl.gens.find(n);
  if (it != bl.gens.end()) return it->second;
  auto [lhs, rhs] = relation_pair(n);
  int slot = b.add_generator(lhs, rhs);
  bl.gens.emplace(n, slot);
  return slot;
}

// (a b^h a b^w, a b^{h+j} a^w) for j dividing h, via the relation h/j under
// the substitution b -> b^j.
inline int edge(ScriptBuilder& b, Blocks& bl, int h, int j) {
  auto key = std::make_pair(h, j);
  auto it = bl.edges.find(key);
  if (it != bl.edges.end()) return it->second;
  if (j < 1 || h % j != 0) throw std::logic_error("edge: j must divide h");
  int slot = need_gen(b, bl, h / j);
  int step = b.gen(slot, subst("a", rep("b", j)));
  bl.edges.emplace(key, step);
  return step;
}

// (a b^m a^w, a b^{m+1} a^w).
inline int link(ScriptBuilder& b, Blocks& bl, int m) {
  auto it = bl.links.find(m);
  if (it != bl.links.end()) return it->second;
  int step;
  if (m % 2 == 1) {
    int e1 = edge(b, bl, m - 1, 1);
    int e2 = edge(b, bl, m - 1, 2);
    step = b.trans({b.sym(e1), e2});
  } else {
    int e1 = edge(b, bl, m - 1, m - 1);
    int e2 = edge(b, bl, m - 1, 1);
    int e3 = edge(b, bl, 2 * m - 4, 2);
    int e4 = edge(b, bl, 2 * m - 4, 4);
    int e5 = edge(b, bl, m, m);
    int e6 = edge(b, bl, m, 1);
    step = b.trans({b.sym(e2), e1, b.sym(e3), e4, b.sym(e5), e6});
  }
  bl.links.emplace(m, step);
  return step;
}

// (ab^w, a b^3 a^w) by a limit over the family (a b^{k+2} a^w, a b^3 a^w).
inline int emit_first(ScriptBuilder& b, Blocks& bl) {
  if (bl.first >= 0) return bl.first;
  std::vector<int> instances;
  instances.push_back(b.refl(KWord::omega("abbb", "a")));
  std::vector<int> chain;
  for (int k = 2; k <= kLimitBound; ++k) {
    chain.push_back(link(b, bl, k + 1));
    instances.push_back(b.sym(b.trans(chain)));
  }
  PumpTemplate lhs({{"a", PumpExp::One}, {"b", PumpExp::K}, {"bb", PumpExp::One},
                    {"a", PumpExp::Omega}});
  PumpTemplate rhs({{"abbb", PumpExp::One}, {"a", PumpExp::Omega}});
  bl.first = b.limit(lhs, rhs, kLimitBound, instances);
  return bl.first;
}

// (ab^w, (ab^2)^w) by pumping the block abb.
inline int emit_second(ScriptBuilder& b, Blocks& bl) {
  if (bl.second >= 0) return bl.second;
  int first = emit_first(b, bl);
  int base = b.trans({first, link(b, bl, 3), b.sym(edge(b, bl, 2, 2))});
  std::vector<int> instances{base};
  std::vector<int> chain{base};
  for (int k = 2; k <= kLimitBound; ++k) {
    chain.push_back(b.derived(base, {}, rep("abb", k - 1)));
    instances.push_back(b.trans(chain));
  }
  PumpTemplate lhs({{"a", PumpExp::One}, {"b", PumpExp::Omega}});
  PumpTemplate rhs({{"abb", PumpExp::K}, {"a", PumpExp::One}, {"b", PumpExp::Omega}});
  bl.second = b.limit(lhs, rhs, kLimitBound, instances);
  return bl.second;
}

// ((ab)^2 a^w, (ab)^w).
inline int emit_third(ScriptBuilder& b, Blocks& bl) {
  if (bl.third >= 0) return bl.third;
  int second = emit_second(b, bl);
  int left = b.derived(second, subst("bab", "a"), "a");
  int right = b.derived(second, subst("a", "ba"));
  bl.third = b.trans({left, b.sym(right)});
  return bl.third;
}

// ((ab)^w, (aba)^w) by pumping the block aba.
inline int emit_fourth(ScriptBuilder& b, Blocks& bl) {
  if (bl.fourth >= 0) return bl.fourth;
  int third = emit_third(b, bl);
  int s1 = b.gen(need_gen(b, bl, 1), subst("a", "ba"));
  int s2 = b.trans({s1, third});  // (aba(ab)^w, (ab)^w)
  std::vector<int> instances;
  std::vector<int> chain;
  for (int k = 1; k <= kLimitBound; ++k) {
    chain.push_back(b.sym(k == 1 ? s2 : b.derived(s2, {}, rep("aba", k - 1))));
    instances.push_back(k == 1 ? chain[0] : b.trans(chain));
  }
  PumpTemplate lhs({{"ab", PumpExp::Omega}});
  PumpTemplate rhs({{"aba", PumpExp::K}, {"ab", PumpExp::Omega}});
  bl.fourth = b.limit(lhs, rhs, kLimitBound, instances);
  return bl.fourth;
}

// ((aba)^w, aba^w) by pumping aba against it.
inline int emit_fifth(ScriptBuilder& b, Blocks& bl) {
  if (bl.fifth >= 0) return bl.fifth;
  int first = emit_first(b, bl);
  int a = b.derived(first, swap_ab(), "a");            // (aba^w, a b^3... swapped)
  int s = b.gen(need_gen(b, bl, 2), swap_ab(), "a");   // (abaaba^w..., ab a^3 b^w)
  int base = b.trans({a, b.sym(s)});                   // (aba^w, aba.aba^w)
  std::vector<int> instances;
  std::vector<int> chain;
  for (int k = 1; k <= kLimitBound; ++k) {
    chain.push_back(k == 1 ? base : b.derived(base, {}, rep("aba", k - 1)));
    instances.push_back(k == 1 ? base : b.trans(chain));
  }
  PumpTemplate lhs({{"ab", PumpExp::One}, {"a", PumpExp::Omega}});
  PumpTemplate rhs({{"aba", PumpExp::K}, {"ab", PumpExp::One}, {"a", PumpExp::Omega}});
  bl.fifth = b.sym(b.limit(lhs, rhs, kLimitBound, instances));
  return bl.fifth;
}

// ((ab)^w, aba^w).
inline int emit_sixth(ScriptBuilder& b, Blocks& bl) {
  if (bl.sixth >= 0) return bl.sixth;
  bl.sixth = b.trans({emit_fourth(b, bl), emit_fifth(b, bl)});
  return bl.sixth;
}

// (ab^w, aba^w).
inline int emit_seventh(ScriptBuilder& b, Blocks& bl) {
  if (bl.seventh >= 0) return bl.seventh;
  int second = emit_second(b, bl);
  int sixth = emit_sixth(b, bl);
  int p2 = b.derived(sixth, subst("ab", "b"));
  int p3 = b.derived(sixth, {}, "abb");
  int p4 = b.gen(need_gen(b, bl, 1), swap_ab(), "ab");
  int c1 = b.trans({second, p2, p3, p4});  // (ab^w, abba.ab^w)
  std::vector<int> instances;
  std::vector<int> chain;
  for (int k = 1; k <= kLimitBound; ++k) {
    chain.push_back(k == 1 ? c1 : b.derived(c1, {}, rep("abba", k - 1)));
    instances.push_back(k == 1 ? c1 : b.trans(chain));
  }
  PumpTemplate lhs({{"a", PumpExp::One}, {"b", PumpExp::Omega}});
  PumpTemplate rhs1({{"abba", PumpExp::K}, {"a", PumpExp::One}, {"b", PumpExp::Omega}});
  int l1 = b.limit(lhs, rhs1, kLimitBound, instances);  // (ab^w, (abba)^w)

  int p6 = b.derived(second, subst("bb", "a"), "a");  // (abba^w..., (abba)^w)
  int p7 = b.gen(need_gen(b, bl, 1));
  int c2 = b.trans({l1, b.sym(p6), b.sym(p7)});  // (ab^w, ab.ab^w)
  std::vector<int> instances2;
  std::vector<int> chain2;
  for (int k = 1; k <= kLimitBound; ++k) {
    chain2.push_back(k == 1 ? c2 : b.derived(c2, {}, rep("ab", k - 1)));
    instances2.push_back(k == 1 ? c2 : b.trans(chain2));
  }
  PumpTemplate rhs2({{"ab", PumpExp::K}, {"a", PumpExp::One}, {"b", PumpExp::Omega}});
  int l2 = b.limit(lhs, rhs2, kLimitBound, instances2);  // (ab^w, (ab)^w)
  bl.seventh = b.trans({l2, sixth});
  return bl.seventh;
}

}  // namespace detail

/// The shipped scripts, named as the experiment suite expects them.
inline DerivationScript build_script(const std::string& name) {
  using namespace detail;
  ScriptBuilder b(name);
  Blocks bl;
  if (name == "lemma-4.2-i") {
    b.sym(emit_first(b, bl));
  } else if (name == "lemma-4.2-ii") {
    emit_second(b, bl);
  } else if (name == "lemma-4.2-iii") {
    emit_third(b, bl);
  } else if (name == "lemma-4.2-iv") {
    emit_fourth(b, bl);
  } else if (name == "lemma-4.2-v") {
    emit_fifth(b, bl);
  } else if (name == "lemma-4.2-vi") {
    emit_sixth(b, bl);
  } else if (name == "lemma-4.2-vii") {
    emit_seventh(b, bl);
  } else if (name == "lemma-4.2-viii") {
    int seventh = emit_seventh(b, bl);
    // Moves (ab^w, a b^m a^n b^w): substitution instances of the headline
    // pair and its swap, glued by transitivity.
    auto move = [&](int m, int n) {
      int qm = b.derived(seventh, subst("a", rep("b", m)));
      int sn = b.derived(seventh, subst("b", rep("a", n)));
      int rmn = b.derived(sn, {}, "a" + rep("b", m - 1));
      return b.trans({qm, rmn});
    };
    int m22 = move(2, 2);  // (ab^w, abba.ab^w)
    int m21 = move(2, 1);  // (ab^w, abb.ab^w)
    int m11 = move(1, 1);  // (ab^w, ab.ab^w)
    int m12 = move(1, 2);  // (ab^w, aba.ab^w)
    std::vector<int> instances{m22};
    for (int k = 2; k <= kLimitBound; ++k) {
      std::vector<int> chain{m21};
      std::string prefix = "abb";
      for (int j = 2; j < k; ++j) {
        chain.push_back(b.derived(m11, {}, prefix));
        prefix += "ab";
      }
      chain.push_back(b.derived(m12, {}, prefix));
      instances.push_back(b.trans(chain));
    }
    PumpTemplate lhs({{"a", PumpExp::One}, {"b", PumpExp::Omega}});
    PumpTemplate rhs({{"ab", PumpExp::One}, {"ba", PumpExp::K}, {"a", PumpExp::One},
                      {"b", PumpExp::Omega}});
    b.limit(lhs, rhs, kLimitBound, instances);
  } else if (name == "remark-single-generator") {
    int p = b.add_generator(KWord::omega("ab", "a"), KWord::omega("a", "b"));
    auto x2 = [&](int m) { return b.gen(p, subst("a", rep("b", m))); };
    std::vector<int> x2s;
    for (int m = 1; m <= 4; ++m) x2s.push_back(x2(m));
    for (int n = 1; n <= 3; ++n) {
      int y = b.gen(p, swap_ab(), "a" + rep("b", n - 1));
      b.trans({y, x2s[n - 1], b.sym(x2s[n])});
    }
  } else {
    throw std::invalid_argument("unknown builtin script: " + name);
  }
  return b.take();
}

inline const std::vector<std::string>& builtin_script_names() {
  static const std::vector<std::string> names = {
      "lemma-4.2-i",   "lemma-4.2-ii", "lemma-4.2-iii", "lemma-4.2-iv",
      "lemma-4.2-v",   "lemma-4.2-vi", "lemma-4.2-vii", "lemma-4.2-viii",
      "remark-single-generator"};
  return names;
}

}  // namespace scripts

}  // namespace prok
