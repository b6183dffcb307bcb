#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prok/fin_semigroup.hpp"
#include "prok/kn_semigroup.hpp"

namespace prok {

/// Finite algebra with one self-map per letter and an optional distinguished
/// element (the nullary constant).
struct UnaryAlgebra {
  int size = 0;
  std::map<char, std::vector<int>> ops;
  std::optional<int> distinguished;

  void validate() const {
    if (size <= 0) throw std::invalid_argument("UnaryAlgebra: empty carrier");
    for (const auto& [a, f] : ops) {
      if (static_cast<int>(f.size()) != size)
        throw std::invalid_argument("UnaryAlgebra: operation table size mismatch");
      for (int v : f)
        if (v < 0 || v >= size)
          throw std::invalid_argument("UnaryAlgebra: operation value out of range");
    }
    if (distinguished && (*distinguished < 0 || *distinguished >= size))
      throw std::invalid_argument("UnaryAlgebra: distinguished element out of range");
  }

  int apply(char a, int u) const { return ops.at(a).at(u); }

  /// Evaluates the term w(x): letters act right-to-left, so "ab" means
  /// first b, then a.
  int act(const std::string& w, int u) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) u = apply(*it, u);
    return u;
  }

  std::string letters() const {
    std::string out;
    for (const auto& [a, f] : ops) out.push_back(a);
    return out;
  }

  friend bool operator==(const UnaryAlgebra&, const UnaryAlgebra&) = default;
};

/// True iff every element is reachable from the distinguished one.
inline bool is_one_generated(const UnaryAlgebra& u) {
  if (!u.distinguished) return false;
  std::vector<bool> seen(u.size, false);
  std::queue<int> work;
  seen[*u.distinguished] = true;
  work.push(*u.distinguished);
  int count = 1;
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (const auto& [a, f] : u.ops) {
      int y = f[x];
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        work.push(y);
      }
    }
  }
  return count == u.size;
}

using Transformation = std::vector<int>;

inline Transformation compose(const Transformation& f, const Transformation& g) {
  Transformation out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

/// A finite monoid given by table, with a generating map from letters.
/// Elements carry the least witnessing word (length-lexicographic) when the
/// monoid was produced by the transformation-monoid construction.
struct AGenMonoid {
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::map<char, int> gamma;
  std::vector<std::string> witness;  // may be empty when constructed from a table

  int size() const { return static_cast<int>(table.size()); }
  int mul(int i, int j) const { return table[i][j]; }

  int eval_word(const std::string& w) const {
    int acc = identity;
    for (char c : w) acc = mul(acc, gamma.at(c));
    return acc;
  }

  void validate() const {
    int n = size();
    if (n == 0) throw std::invalid_argument("AGenMonoid: empty carrier");
    for (const auto& row : table)
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("AGenMonoid: ragged table");
    for (int i = 0; i < n; ++i)
      if (mul(identity, i) != i || mul(i, identity) != i)
        throw std::invalid_argument("AGenMonoid: identity law fails");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = mul(a, b);
        if (ab < 0 || ab >= n)
          throw std::invalid_argument("AGenMonoid: table entry out of range");
        for (int c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw std::invalid_argument("AGenMonoid: not associative");
      }
    // The submonoid generated by the letter images must be everything.
    std::vector<bool> seen(n, false);
    seen[identity] = true;
    std::queue<int> work;
    work.push(identity);
    int count = 1;
    while (!work.empty()) {
      int x = work.front();
      work.pop();
      for (const auto& [a, g] : gamma) {
        int y = mul(x, g);
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          work.push(y);
        }
      }
    }
    if (count != n)
      throw std::invalid_argument("AGenMonoid: letter images do not generate");
  }

  friend bool operator==(const AGenMonoid& x, const AGenMonoid& y) {
    return x.table == y.table && x.identity == y.identity && x.gamma == y.gamma;
  }
};

/// The transformation monoid of a unary algebra: all self-maps realized by
/// words, composed breadth-first so that every element keeps its
/// length-lexicographically least witnessing word.  The identity is included.
inline AGenMonoid transformation_monoid(const UnaryAlgebra& u) {
  u.validate();
  AGenMonoid m;
  std::vector<Transformation> elems;
  std::map<Transformation, int> index;
  Transformation id(u.size);
  for (int i = 0; i < u.size; ++i) id[i] = i;
  elems.push_back(id);
  index.emplace(id, 0);
  m.witness.push_back("");
  std::queue<int> work;
  work.push(0);
  std::string letters = u.letters();
  while (!work.empty()) {
    int i = work.front();
    work.pop();
    for (char a : letters) {
      // extend the witness on the right: word w.a acts by w after a
      Transformation t(u.size);
      for (int x = 0; x < u.size; ++x) t[x] = elems[i][u.ops.at(a)[x]];
      auto [it, fresh] = index.emplace(t, static_cast<int>(elems.size()));
      if (fresh) {
        elems.push_back(t);
        m.witness.push_back(m.witness[i] + a);
        work.push(static_cast<int>(elems.size()) - 1);
      }
    }
  }
  int n = static_cast<int>(elems.size());
  m.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.table[i][j] = index.at(compose(elems[i], elems[j]));
  m.identity = 0;
  for (char a : letters) m.gamma[a] = index.at(u.ops.at(a));
  return m;
}

/// The transformations realized by the monoid, in element order.
inline std::vector<Transformation> monoid_transformations(const UnaryAlgebra& u,
                                                          const AGenMonoid& m) {
  std::vector<Transformation> out;
  for (int i = 0; i < m.size(); ++i) {
    Transformation t(u.size);
    for (int x = 0; x < u.size; ++x) t[x] = u.act(m.witness.at(i), x);
    out.push_back(std::move(t));
  }
  return out;
}

/// Left-multiplication algebra of an A-generated monoid: carrier the monoid,
/// each letter acting by left multiplication with its image, distinguished
/// element the identity.
inline UnaryAlgebra left_action_algebra(const AGenMonoid& m) {
  UnaryAlgebra u;
  u.size = m.size();
  for (const auto& [a, g] : m.gamma) {
    std::vector<int> f(m.size());
    for (int x = 0; x < m.size(); ++x) f[x] = m.mul(g, x);
    u.ops.emplace(a, std::move(f));
  }
  u.distinguished = m.identity;
  return u;
}

/// Checks that phi is an onto homomorphism of unary algebras.
inline bool is_onto_homomorphism(const UnaryAlgebra& u, const UnaryAlgebra& v,
                                 const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != u.size) return false;
  std::vector<bool> hit(v.size, false);
  for (int x : phi) {
    if (x < 0 || x >= v.size) return false;
    hit[x] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
  if (u.letters() != v.letters()) return false;
  for (const auto& [a, f] : u.ops)
    for (int x = 0; x < u.size; ++x)
      if (phi[f[x]] != v.ops.at(a)[phi[x]]) return false;
  return true;
}

/// The monoid homomorphism induced on transformation monoids by an onto
/// algebra homomorphism: the transformation of a word upstairs maps to the
/// transformation of the same word downstairs.  Verified well-defined on
/// every fibre, multiplicative, generator-compatible and onto.
inline std::vector<int> induced_hom(const UnaryAlgebra& u, const UnaryAlgebra& v,
                                    const std::vector<int>& phi, const AGenMonoid& mu,
                                    const AGenMonoid& mv) {
  if (!is_onto_homomorphism(u, v, phi))
    throw std::invalid_argument("induced_hom: not an onto homomorphism");
  std::vector<Transformation> tu = monoid_transformations(u, mu);
  std::vector<Transformation> tv = monoid_transformations(v, mv);
  std::map<Transformation, int> v_index;
  for (int i = 0; i < mv.size(); ++i) v_index.emplace(tv[i], i);

  std::vector<int> out(mu.size(), -1);
  for (int i = 0; i < mu.size(); ++i) {
    Transformation image(v.size, -1);
    for (int x = 0; x < u.size; ++x) {
      int vx = phi[x];
      int val = phi[tu[i][x]];
      if (image[vx] >= 0 && image[vx] != val)
        throw std::logic_error("induced_hom: transformation does not descend");
      image[vx] = val;
    }
    auto it = v_index.find(image);
    if (it == v_index.end())
      throw std::logic_error("induced_hom: image transformation not realized");
    out[i] = it->second;
  }
  for (int i = 0; i < mu.size(); ++i)
    for (int j = 0; j < mu.size(); ++j)
      if (out[mu.mul(i, j)] != mv.mul(out[i], out[j]))
        throw std::logic_error("induced_hom: not multiplicative");
  for (const auto& [a, g] : mu.gamma)
    if (out[g] != mv.gamma.at(a))
      throw std::logic_error("induced_hom: generator images disagree");
  std::set<int> image_set(out.begin(), out.end());
  if (static_cast<int>(image_set.size()) != mv.size())
    throw std::logic_error("induced_hom: not onto");
  return out;
}

/// Evaluation at the distinguished element: the onto homomorphism from the
/// left-action algebra of the transformation monoid back onto a 1-generated
/// algebra.
inline std::vector<int> evaluation_collapse(const UnaryAlgebra& u, const AGenMonoid& m) {
  if (!u.distinguished || !is_one_generated(u))
    throw std::invalid_argument("evaluation_collapse: algebra must be 1-generated");
  int x0 = *u.distinguished;
  std::vector<int> beta(m.size());
  for (int i = 0; i < m.size(); ++i) beta[i] = u.act(m.witness.at(i), x0);
  UnaryAlgebra psi = left_action_algebra(m);
  if (!is_onto_homomorphism(psi, u, beta))
    throw std::logic_error("evaluation_collapse: beta is not an onto homomorphism");
  if (beta[m.identity] != x0)
    throw std::logic_error("evaluation_collapse: identity does not map to the generator");
  return beta;
}

/// Checks the canonical isomorphism between a monoid and the transformation
/// monoid of its own left-action algebra (evaluation at the identity).
inline bool left_action_faithful(const AGenMonoid& g) {
  UnaryAlgebra psi = left_action_algebra(g);
  AGenMonoid m2 = transformation_monoid(psi);
  if (m2.size() != g.size()) return false;
  std::vector<Transformation> ts = monoid_transformations(psi, m2);
  std::vector<int> to_g(m2.size());
  std::vector<bool> hit(g.size(), false);
  for (int i = 0; i < m2.size(); ++i) {
    to_g[i] = ts[i][g.identity];
    if (hit[to_g[i]]) return false;
    hit[to_g[i]] = true;
  }
  for (int i = 0; i < m2.size(); ++i)
    for (int j = 0; j < m2.size(); ++j)
      if (to_g[m2.mul(i, j)] != g.mul(to_g[i], to_g[j])) return false;
  for (const auto& [a, img] : m2.gamma)
    if (to_g[img] != g.gamma.at(a)) return false;
  return to_g[m2.identity] == g.identity;
}

/// Existence of a homomorphism of pointed 1-generated algebras: the map of
/// generators extends iff simultaneous reachability never conflicts.
inline bool hom_exists_algebra(const UnaryAlgebra& u, const UnaryAlgebra& v) {
  if (!u.distinguished || !v.distinguished || !is_one_generated(u))
    throw std::invalid_argument("hom_exists_algebra: algebras must be 1-generated");
  if (u.letters() != v.letters())
    throw std::invalid_argument("hom_exists_algebra: signatures differ");
  std::vector<int> vmap(u.size, -1);
  vmap[*u.distinguished] = *v.distinguished;
  std::queue<int> work;
  work.push(*u.distinguished);
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (const auto& [a, f] : u.ops) {
      int y = f[x];
      int target = v.ops.at(a)[vmap[x]];
      if (vmap[y] < 0) {
        vmap[y] = target;
        work.push(y);
      } else if (vmap[y] != target) {
        return false;
      }
    }
  }
  return true;
}

/// Existence of a generator-respecting monoid homomorphism: the kernel of
/// the source's evaluation map must refine the target's.
inline bool hom_exists_monoid(const AGenMonoid& g, const AGenMonoid& h) {
  if (g.gamma.size() != h.gamma.size())
    throw std::invalid_argument("hom_exists_monoid: signatures differ");
  for (const auto& [a, _] : g.gamma)
    if (!h.gamma.count(a))
      throw std::invalid_argument("hom_exists_monoid: signatures differ");
  std::vector<int> hmap(g.size(), -1);
  hmap[g.identity] = h.identity;
  std::queue<int> work;
  work.push(g.identity);
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (const auto& [a, img] : g.gamma) {
      int y = g.mul(x, img);
      int target = h.mul(hmap[x], h.gamma.at(a));
      if (hmap[y] < 0) {
        hmap[y] = target;
        work.push(y);
      } else if (hmap[y] != target) {
        return false;
      }
    }
  }
  return true;
}

struct AdjunctionResult {
  bool algebra_side = false;  // morphism from the left-action algebra of g to u
  bool monoid_side = false;   // morphism from g to the transformation monoid of u
  bool agree() const { return algebra_side == monoid_side; }
};

/// The adjunction biconditional for one pair of objects.
inline AdjunctionResult adjunction_check(const AGenMonoid& g, const UnaryAlgebra& u) {
  AdjunctionResult r;
  r.algebra_side = hom_exists_algebra(left_action_algebra(g), u);
  r.monoid_side = hom_exists_monoid(g, transformation_monoid(u));
  return r;
}

/// All 1-generated unary algebras on at most max_points points over the
/// given letters, in a deterministic enumeration order.
inline std::vector<UnaryAlgebra> enumerate_one_generated(int max_points,
                                                         const std::string& letters) {
  std::vector<UnaryAlgebra> out;
  for (int size = 1; size <= max_points; ++size) {
    std::vector<std::vector<int>> maps;
    std::vector<int> cur(size, 0);
    // all self-maps of {0..size-1} in lexicographic order
    while (true) {
      maps.push_back(cur);
      int i = size - 1;
      while (i >= 0 && cur[i] == size - 1) cur[i--] = 0;
      if (i < 0) break;
      ++cur[i];
    }
    std::vector<std::size_t> pick(letters.size(), 0);
    while (true) {
      UnaryAlgebra u;
      u.size = size;
      for (std::size_t li = 0; li < letters.size(); ++li)
        u.ops.emplace(letters[li], maps[pick[li]]);
      for (int d = 0; d < size; ++d) {
        u.distinguished = d;
        if (is_one_generated(u)) out.push_back(u);
      }
      std::size_t li = letters.size();
      bool done = true;
      while (li-- > 0) {
        if (++pick[li] < maps.size()) {
          done = false;
          break;
        }
        pick[li] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

struct CollapseViolation {
  std::vector<int> op;   // the target algebra's single operation
  int hom_seed = 0;      // image of the top generator
  int merged_low = 0, merged_high = 0;
  int witness = 0;  // some k <= merged_high with phi(k) != phi(0)
};

struct CollapseReport {
  int algebras = 0;
  int homomorphisms = 0;
  std::vector<CollapseViolation> violations;
};

/// In the clamp-decrement single-letter chain on {0..N}, any finite-algebra
/// homomorphism that merges two points must collapse everything below the
/// larger one to the image of 0.
inline CollapseReport collapse_check(int chain_length, int max_target_points) {
  if (chain_length < 2) throw std::invalid_argument("collapse_check: chain too short");
  CollapseReport report;
  int n_top = chain_length;
  for (int f = 1; f <= max_target_points; ++f) {
    std::vector<int> op(f, 0);
    while (true) {
      ++report.algebras;
      for (int seed = 0; seed < f; ++seed) {
        // phi(n) = op^{N-n}(seed); it is a homomorphism iff phi(0) is fixed.
        std::vector<int> phi(n_top + 1);
        phi[n_top] = seed;
        for (int n = n_top - 1; n >= 0; --n) phi[n] = op[phi[n + 1]];
        if (op[phi[0]] != phi[0]) continue;
        ++report.homomorphisms;
        int merged_low = -1, merged_high = -1;
        for (int m = 1; m <= n_top && merged_low < 0; ++m)
          for (int n = 0; n < m; ++n)
            if (phi[m] == phi[n]) {
              merged_low = n;
              merged_high = m;
              break;
            }
        if (merged_low < 0) continue;
        for (int k = 0; k <= merged_high; ++k)
          if (phi[k] != phi[0]) {
            report.violations.push_back({op, seed, merged_low, merged_high, k});
            break;
          }
      }
      int i = f - 1;
      while (i >= 0 && op[i] == f - 1) op[i--] = 0;
      if (i < 0) break;
      ++op[i];
    }
  }
  return report;
}

struct TowerReport {
  int levels = 0;
  bool functorial = false;
  /// Histogram over distinct top-level transformation pairs of the deepest
  /// level that still separates them (level 0 is the top itself).
  std::vector<int> separation_histogram;
};

/// Functoriality and separation along a tower A_0 -> A_1 -> ... of onto
/// homomorphisms: induced maps compose, and each distinct pair at the top is
/// separated at every level up to some depth, recorded in the histogram.
inline TowerReport tower_check(const std::vector<UnaryAlgebra>& levels,
                               const std::vector<std::vector<int>>& maps) {
  if (levels.size() < 2 || maps.size() + 1 != levels.size())
    throw std::invalid_argument("tower_check: need n levels and n-1 maps");
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!is_onto_homomorphism(levels[i], levels[i + 1], maps[i]))
      throw std::invalid_argument("tower_check: connecting map " + std::to_string(i) +
                                  " is not an onto homomorphism");
  std::vector<AGenMonoid> monoids;
  for (const auto& u : levels) monoids.push_back(transformation_monoid(u));

  // Induced maps on adjacent levels, then their composites from the top.
  std::vector<std::vector<int>> step;
  for (std::size_t i = 0; i < maps.size(); ++i)
    step.push_back(induced_hom(levels[i], levels[i + 1], maps[i], monoids[i], monoids[i + 1]));

  TowerReport report;
  report.levels = static_cast<int>(levels.size());
  report.functorial = true;
  // Composition of connecting maps must induce the composition of induced maps.
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    std::vector<int> comp(levels[i].size);
    for (int x = 0; x < levels[i].size; ++x) comp[x] = maps[i + 1][maps[i][x]];
    std::vector<int> direct =
        induced_hom(levels[i], levels[i + 2], comp, monoids[i], monoids[i + 2]);
    for (int m = 0; m < monoids[i].size(); ++m)
      if (direct[m] != step[i + 1][step[i][m]]) report.functorial = false;
  }

  std::vector<std::vector<int>> from_top{std::vector<int>(monoids[0].size())};
  for (int m = 0; m < monoids[0].size(); ++m) from_top[0][m] = m;
  for (std::size_t i = 0; i < step.size(); ++i) {
    std::vector<int> next(monoids[0].size());
    for (int m = 0; m < monoids[0].size(); ++m) next[m] = step[i][from_top.back()[m]];
    from_top.push_back(std::move(next));
  }
  report.separation_histogram.assign(levels.size(), 0);
  for (int s = 0; s < monoids[0].size(); ++s)
    for (int t = s + 1; t < monoids[0].size(); ++t) {
      int deepest = 0;
      for (std::size_t l = 0; l < from_top.size(); ++l)
        if (from_top[l][s] != from_top[l][t]) deepest = static_cast<int>(l);
      ++report.separation_histogram[deepest];
    }
  return report;
}

/// The monoid of the truncated-word semigroup with an identity adjoined,
/// generated by the letters.
inline AGenMonoid kn_monoid(const KnSemigroup& kn) {
  AGenMonoid m;
  int n = kn.size() + 1;
  m.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    m.table[0][i] = i;
    m.table[i][0] = i;
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) m.table[i][j] = kn.mul(i - 1, j - 1) + 1;
  m.identity = 0;
  m.witness.push_back("");
  for (int i = 1; i < n; ++i) m.witness.push_back(kn.word_of(i - 1));
  for (std::size_t a = 0; a < kn.alphabet().size(); ++a) {
    char c = kn.alphabet().letter(a);
    m.gamma[c] = kn.index_of(std::string(1, c)) + 1;
  }
  return m;
}

}  // namespace prok
