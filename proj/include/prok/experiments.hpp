#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "prok/cantor.hpp"
#include "prok/derivation.hpp"
#include "prok/kn_semigroup.hpp"
#include "prok/kword.hpp"
#include "prok/polish.hpp"
#include "prok/random.hpp"
#include "prok/separation.hpp"
#include "prok/sweeps.hpp"
#include "prok/theta.hpp"
#include "prok/unary.hpp"

namespace prok::experiments {

// ---------------------------------------------------------------------------
// Nilpotency sweep over the truncated-word semigroups.

struct LevelSweepOutcome {
  struct Level {
    int n = 0;
    int elements = 0;
    int total_pairs = 0;
    int hypothesis_pairs = 0;
    long violations = 0;
  };
  std::vector<Level> levels;
  long violations = 0;
};

inline LevelSweepOutcome nilpotency_levels(int n_max) {
  LevelSweepOutcome out;
  for (int n = 2; n <= n_max; ++n) {
    KnSemigroup kn(Alphabet("ab"), n);
    FinSemigroup s = kn.to_fin();
    NilpotencySweepReport r = nilpotency_sweep(s, n);
    out.levels.push_back({n, s.size(), r.total_pairs, r.hypothesis_pairs,
                          static_cast<long>(r.violations.size())});
    out.violations += static_cast<long>(r.violations.size());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotient by the swapped pair merges the letter powers.

struct QuotientCollapseOutcome {
  struct Level {
    int n = 0;
    int elements = 0;
    int classes = 0;
    bool merged = false;
  };
  std::vector<Level> levels;
  long violations = 0;
};

inline QuotientCollapseOutcome quotient_collapse(int n_max) {
  QuotientCollapseOutcome out;
  for (int n = 2; n <= n_max; ++n) {
    KnSemigroup kn(Alphabet("ab"), n);
    FinSemigroup s = kn.to_fin();
    int u = kn.project(KWord::omega("a", "b"));
    int v = kn.project(KWord::omega("b", "a"));
    Congruence c = congruence_closure(s, {{u, v}});
    FinSemigroup q = quotient(s, c);  // validates the congruence
    int an = kn.project(KWord::omega("", "a"));
    int bn = kn.project(KWord::omega("", "b"));
    bool merged = c.related(an, bn);
    out.levels.push_back({n, s.size(), q.size(), merged});
    if (!merged) ++out.violations;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decider property sweeps.

inline KWord random_kword(Rng& rng) {
  if (rng.coin()) return KWord::finite(rng.word("ab", rng.between(1, 6)));
  return KWord::omega(rng.word("ab", rng.below(5)), rng.word("ab", rng.between(1, 4)));
}

inline KWord random_omega(Rng& rng) {
  return KWord::omega(rng.word("ab", rng.below(5)), rng.word("ab", rng.between(1, 4)));
}

struct DeciderSweepOutcome {
  long checks = 0;
  long violations = 0;
};

/// Equivalence axioms on a sample plus congruence stability (and, for the
/// fully invariant decider, substitution stability) on seeded random pairs.
inline DeciderSweepOutcome decider_sweep(bool fully_invariant, std::uint64_t samples,
                                         std::uint64_t seed) {
  auto rel = [fully_invariant](const KWord& x, const KWord& y) {
    return fully_invariant ? content_prefix_related(x, y) : swap_tail_related(x, y);
  };
  DeciderSweepOutcome out;
  Rng rng(seed);
  std::vector<KWord> sample;
  for (int i = 0; i < 120; ++i) sample.push_back(random_kword(rng));
  for (const KWord& x : sample) {
    ++out.checks;
    if (!rel(x, x)) ++out.violations;
  }
  for (const KWord& x : sample)
    for (const KWord& y : sample) {
      ++out.checks;
      if (rel(x, y) != rel(y, x)) ++out.violations;
    }
  for (const KWord& x : sample)
    for (const KWord& y : sample) {
      if (!rel(x, y)) continue;
      for (const KWord& z : sample) {
        ++out.checks;
        if (rel(y, z) && !rel(x, z)) ++out.violations;
      }
    }
  for (std::uint64_t i = 0; i < samples; ++i) {
    // Construct a related pair directly: either equal, or a swapped pair
    // with a shared prefix (also related under the coarser decider).
    KWord x = KWord::omega("a", "b");
    KWord y = x;
    if (rng.coin()) {
      x = y = random_kword(rng);
    } else {
      std::string w = fully_invariant ? "ab" + rng.word("ab", rng.below(4))
                                      : rng.word("ab", rng.below(4));
      KWord tail_y = KWord::omega("b", "a");
      if (!w.empty()) x = multiply(KWord::finite(w), x);
      y = w.empty() ? tail_y : multiply(KWord::finite(w), tail_y);
    }
    if (!rel(x, y)) {
      ++out.violations;
      continue;
    }
    KWord w = KWord::finite(rng.word("ab", rng.between(1, 4)));
    ++out.checks;
    if (!rel(multiply(w, x), multiply(w, y))) ++out.violations;
    ++out.checks;
    if (!rel(multiply(x, w), multiply(y, w))) ++out.violations;
    if (fully_invariant) {
      Substitution s{{'a', random_kword(rng)}, {'b', random_kword(rng)}};
      ++out.checks;
      if (!rel(substitute(x, s), substitute(y, s))) ++out.violations;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cantor kernel.

struct KernelOutcome {
  std::uint64_t exhaustive_pairs = 0;
  std::uint64_t sampled_pairs = 0;
  long violations = 0;
};

inline KernelOutcome kernel_experiment(std::size_t max_pre, std::size_t max_per,
                                       std::uint64_t samples, std::uint64_t seed) {
  KernelOutcome out;
  KernelReport ex = kernel_exhaustive(max_pre, max_per);
  out.exhaustive_pairs = ex.pairs_checked;
  out.violations += static_cast<long>(ex.mismatches.size());
  KernelReport rnd = kernel_crosscheck(samples, seed);
  out.sampled_pairs = rnd.pairs_checked;
  out.violations += static_cast<long>(rnd.mismatches.size());
  return out;
}

// ---------------------------------------------------------------------------
// Separation levels.

struct SeparationOutcome {
  struct PairResult {
    std::string x, y;
    bool expect_separated = false;
    std::optional<int> level;
    bool ok = false;
  };
  std::vector<PairResult> results;
  bool generator_pair_stays_merged = false;
  long violations = 0;
};

inline SeparationOutcome separation_experiment(int n_max, int subst_depth, int count_each,
                                               int generator_count, std::uint64_t seed) {
  SeparationOutcome out;
  TruncationSeparator separator(content_prefix_generators(generator_count), n_max,
                                subst_depth);
  Rng rng(seed);

  std::vector<KPair> unrelated{{KWord::omega("", "a"), KWord::omega("", "b")},
                               {KWord::omega("a", "b"), KWord::omega("b", "a")}};
  while (static_cast<int>(unrelated.size()) < count_each) {
    KWord x = random_omega(rng);
    KWord y = random_omega(rng);
    if (!content_prefix_related(x, y)) unrelated.emplace_back(x, y);
  }
  std::vector<KPair> related;
  while (static_cast<int>(related.size()) < count_each) {
    KWord x = random_omega(rng);
    KWord y = random_omega(rng);
    if (x != y && content_prefix_related(x, y)) related.emplace_back(x, y);
  }

  for (const auto& [x, y] : unrelated) {
    auto level = separator.least_separating_level(x, y);
    bool ok = level.has_value();
    out.results.push_back({x.to_string(), y.to_string(), true, level, ok});
    if (!ok) ++out.violations;
  }
  for (const auto& [x, y] : related) {
    auto level = separator.least_separating_level(x, y);
    bool ok = !level.has_value();
    out.results.push_back({x.to_string(), y.to_string(), false, level, ok});
    if (!ok) ++out.violations;
  }

  // The swapped pair used as the sole generator is never separated.
  TruncationSeparator swap_only({{KWord::omega("a", "b"), KWord::omega("b", "a")}}, n_max,
                                subst_depth);
  out.generator_pair_stays_merged =
      !swap_only.least_separating_level(KWord::omega("a", "b"), KWord::omega("b", "a"))
           .has_value();
  if (!out.generator_pair_stays_merged) ++out.violations;
  return out;
}

// ---------------------------------------------------------------------------
// Adjunction sweep.

struct AdjunctionOutcome {
  long algebras = 0;
  long monoids = 0;
  long pairs = 0;
  long disagreements = 0;
  long embedding_failures = 0;  // monoid side of the unit
  long collapse_failures = 0;   // algebra side of the counit
};

inline AdjunctionOutcome adjunction_experiment(int max_points) {
  AdjunctionOutcome out;
  std::vector<UnaryAlgebra> algebras = enumerate_one_generated(max_points, "ab");
  out.algebras = static_cast<long>(algebras.size());

  std::vector<AGenMonoid> monoids;
  std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::pair<char, int>>>> seen;
  std::vector<AGenMonoid> gammas;
  gammas.reserve(algebras.size());
  for (const UnaryAlgebra& u : algebras) {
    AGenMonoid g = transformation_monoid(u);
    if (!left_action_faithful(g)) ++out.embedding_failures;
    try {
      evaluation_collapse(u, g);
    } catch (const std::exception&) {
      ++out.collapse_failures;
    }
    std::vector<std::pair<char, int>> key(g.gamma.begin(), g.gamma.end());
    if (seen.emplace(g.table, key).second) monoids.push_back(g);
    gammas.push_back(std::move(g));
  }
  out.monoids = static_cast<long>(monoids.size());

  std::vector<UnaryAlgebra> actions;
  actions.reserve(monoids.size());
  for (const AGenMonoid& g : monoids) actions.push_back(left_action_algebra(g));

  for (std::size_t mi = 0; mi < monoids.size(); ++mi) {
    for (std::size_t ai = 0; ai < algebras.size(); ++ai) {
      ++out.pairs;
      bool algebra_side = hom_exists_algebra(actions[mi], algebras[ai]);
      bool monoid_side = hom_exists_monoid(monoids[mi], gammas[ai]);
      if (algebra_side != monoid_side) ++out.disagreements;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polish codec round trips.

struct RoundTripOutcome {
  long roundtrips = 0;
  std::size_t exhaustive_terms = 0;
  bool injective = false;
  bool error_classes_ok = false;
  long violations = 0;
};

inline Term random_term(Rng& rng, const Signature& sig, int max_depth, int max_var = 3) {
  if (max_depth <= 1 || rng.below(3) == 0) {
    auto consts = sig.symbols_of_arity(0);
    if (!consts.empty() && rng.coin()) return Term::app(consts[rng.below(consts.size())]);
    return Term::var(static_cast<int>(rng.between(1, max_var)));
  }
  std::vector<char> syms;
  for (const auto& [s, n] : sig.arities())
    if (n > 0) syms.push_back(s);
  char s = syms[rng.below(syms.size())];
  std::vector<Term> children;
  for (int i = 0; i < sig.arity(s); ++i)
    children.push_back(random_term(rng, sig, max_depth - 1, max_var));
  return Term::app(s, std::move(children));
}

inline RoundTripOutcome roundtrip_experiment(std::uint64_t samples, std::uint64_t seed) {
  RoundTripOutcome out;
  Signature sig({{'u', 2}, {'v', 3}, {'f', 1}, {'c', 0}});
  Rng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Term t = random_term(rng, sig, 1 + static_cast<int>(rng.below(8)));
    ++out.roundtrips;
    if (decode(encode(t), sig) != t) ++out.violations;
  }

  // Exhaustive injectivity over depth <= 4 on a two-symbol signature.
  // Terms are deduplicated by their fully parenthesized form, which is
  // injective by construction and independent of the codec under test.
  std::function<std::string(const Term&)> paren = [&paren](const Term& t) -> std::string {
    if (t.is_variable) return "x" + std::to_string(t.variable);
    std::string s(1, t.symbol);
    s += "(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (i) s += ",";
      s += paren(t.children[i]);
    }
    return s + ")";
  };
  std::vector<Term> terms{Term::var(1)};
  for (int d = 2; d <= 4; ++d) {
    std::vector<Term> next = terms;
    for (const Term& t : terms) next.push_back(Term::app('f', {t}));
    for (const Term& t1 : terms)
      for (const Term& t2 : terms) next.push_back(Term::app('u', {t1, t2}));
    std::set<std::string> dedup;
    std::vector<Term> uniq;
    for (const Term& t : next)
      if (dedup.insert(paren(t)).second) uniq.push_back(t);
    terms = std::move(uniq);
  }
  std::set<std::string> codes;
  for (const Term& t : terms) codes.insert(encode(t));
  out.exhaustive_terms = terms.size();
  out.injective = codes.size() == terms.size();
  if (!out.injective) ++out.violations;

  bool truncated = false, surplus = false, unknown = false;
  try {
    decode("uu", sig);
  } catch (const DecodeError& e) {
    truncated = e.kind() == DecodeErrorKind::Truncated;
  }
  try {
    decode("x1x2", sig);
  } catch (const DecodeError& e) {
    surplus = e.kind() == DecodeErrorKind::TrailingSurplus;
  }
  try {
    decode("q", sig);
  } catch (const DecodeError& e) {
    unknown = e.kind() == DecodeErrorKind::UnknownSymbol;
  }
  out.error_classes_ok = truncated && surplus && unknown;
  if (!out.error_classes_ok) ++out.violations;
  return out;
}

// ---------------------------------------------------------------------------
// Collision terms and the idempotent-power identity.

struct CollisionOutcome {
  long instances = 0;
  long violations = 0;
};

inline CollisionOutcome collision_experiment(int k_max) {
  CollisionOutcome out;
  for (int n : {2, 3}) {
    Signature sig({{'u', n}});
    TermAlgebra alg = flip_algebra(sig, n);
    std::map<int, int> assign{{1, 0}, {2, 0}, {3, 0}};
    for (int k = 1; k <= k_max; ++k) {
      ++out.instances;
      try {
        CollisionTerms c = build_collision_terms(k, n);
        if (evaluate(c.t_term, alg, assign) != 0) ++out.violations;
        if (evaluate(c.s_term, alg, assign) != 1) ++out.violations;
        if (c.t_term == c.s_term) ++out.violations;
      } catch (const std::exception&) {
        ++out.violations;
      }
    }
  }
  return out;
}

struct OmegaIdentityOutcome {
  long monoids = 0;
  long pairs = 0;
  long violations = 0;
};

inline OmegaIdentityOutcome omega_identity_experiment(int max_points) {
  OmegaIdentityOutcome out;
  std::vector<FinSemigroup> corpus = self_map_monoid_corpus(max_points);
  out.monoids = static_cast<long>(corpus.size());
  OmegaIdentityReport r;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    check_omega_power_identity(corpus[i], static_cast<int>(i), r);
  out.pairs = r.pairs;
  out.violations = static_cast<long>(r.violations.size());
  return out;
}

// ---------------------------------------------------------------------------
// Separating structures for unary signatures.

struct UnarySeparationOutcome {
  long structures = 0;
  long terms = 0;
  long separated_pairs = 0;
  long violations = 0;
};

inline UnarySeparationOutcome unary_separation_experiment(int max_points,
                                                          std::uint64_t terms_per_structure,
                                                          std::uint64_t seed) {
  UnarySeparationOutcome out;
  Signature sig({{'u', 1}, {'v', 1}, {'c', 0}});
  Rng rng(seed);
  for (int s = 1; s <= max_points; ++s) {
    SeparatingMonoid m(s);
    std::vector<std::vector<int>> maps;
    std::vector<int> cur(s, 0);
    while (true) {
      maps.push_back(cur);
      int i = s - 1;
      while (i >= 0 && cur[i] == s - 1) cur[i--] = 0;
      if (i < 0) break;
      ++cur[i];
    }
    auto random_unary_term = [&](int max_wraps) {
      Term t = rng.coin() ? Term::var(1) : Term::app('c');
      int wraps = static_cast<int>(rng.below(max_wraps + 1));
      for (int i = 0; i < wraps; ++i) t = Term::app(rng.coin() ? 'u' : 'v', {t});
      return t;
    };
    for (const auto& fu : maps) {
      for (const auto& fv : maps) {
        for (int c0 = 0; c0 < s; ++c0) {
          ++out.structures;
          UnaryStructure f;
          f.size = s;
          f.unary['u'] = fu;
          f.unary['v'] = fv;
          f.constants['c'] = c0;
          UnarySeparationReport r;
          std::vector<std::pair<Term, Term>> pairs;
          std::uint64_t pair_count = terms_per_structure / 2;
          for (std::uint64_t i = 0; i < pair_count; ++i)
            pairs.emplace_back(random_unary_term(6), random_unary_term(6));
          std::map<int, int> assign{{1, static_cast<int>(rng.below(s))}};
          verify_unary_separation(sig, f, m, pairs, assign, r);
          out.terms += 2 * static_cast<long>(pairs.size());
          out.separated_pairs += r.separated_pairs;
          out.violations += static_cast<long>(r.violations.size());
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Towers.

struct TowerOutcome {
  int towers = 0;
  long violations = 0;
  std::vector<std::vector<int>> histograms;
};

inline UnaryAlgebra clamp_chain_algebra(int top) {
  UnaryAlgebra u;
  u.size = top + 1;
  std::vector<int> f(u.size);
  for (int i = 0; i <= top; ++i) f[i] = std::max(0, i - 1);
  u.ops.emplace('a', f);
  u.distinguished = top;
  return u;
}

inline TowerOutcome tower_experiment() {
  TowerOutcome out;
  auto run = [&out](const std::vector<UnaryAlgebra>& levels,
                    const std::vector<std::vector<int>>& maps) {
    ++out.towers;
    try {
      TowerReport r = tower_check(levels, maps);
      if (!r.functorial) ++out.violations;
      out.histograms.push_back(r.separation_histogram);
    } catch (const std::exception&) {
      ++out.violations;
    }
  };

  run({clamp_chain_algebra(4), clamp_chain_algebra(3), clamp_chain_algebra(2)},
      {{0, 0, 1, 2, 3}, {0, 0, 1, 2}});

  UnaryAlgebra u = clamp_chain_algebra(2);
  run({u, u, u}, {{0, 1, 2}, {0, 1, 2}});

  std::vector<UnaryAlgebra> levels;
  std::vector<std::vector<int>> maps;
  for (int n = 5; n >= 2; --n)
    levels.push_back(left_action_algebra(kn_monoid(KnSemigroup(Alphabet("ab"), n))));
  for (int i = 0; i + 1 < static_cast<int>(levels.size()); ++i) {
    KnSemigroup hi(Alphabet("ab"), 5 - i);
    KnSemigroup lo(Alphabet("ab"), 5 - i - 1);
    std::vector<int> phi(levels[i].size);
    phi[0] = 0;
    for (int j = 1; j < levels[i].size; ++j) {
      std::string w = hi.word_of(j - 1);
      if (static_cast<int>(w.size()) > lo.n()) w.resize(lo.n());
      phi[j] = lo.index_of(w) + 1;
    }
    maps.push_back(std::move(phi));
  }
  run(levels, maps);
  return out;
}

}  // namespace prok::experiments
