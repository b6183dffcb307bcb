#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prok {

/// Finite semigroup given by a total multiplication table.  Associativity is
/// verified on construction: over all triples, or by Light's test when a
/// generating set is supplied.
class FinSemigroup {
 public:
  FinSemigroup(std::vector<std::string> names, std::vector<std::vector<int>> table,
               std::optional<std::vector<int>> generators = std::nullopt)
      : names_(std::move(names)), table_(std::move(table)) {
    n_ = static_cast<int>(names_.size());
    if (n_ == 0) throw std::invalid_argument("FinSemigroup: empty carrier");
    if (static_cast<int>(table_.size()) != n_)
      throw std::invalid_argument("FinSemigroup: table has wrong number of rows");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n_)
        throw std::invalid_argument("FinSemigroup: ragged table row");
      for (int v : row)
        if (v < 0 || v >= n_)
          throw std::invalid_argument("FinSemigroup: table entry out of range");
    }
    if (generators) {
      check_associativity_light(*generators);
    } else {
      check_associativity_full();
    }
  }

  int size() const { return n_; }
  int mul(int i, int j) const { return table_[i][j]; }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
      if (names_[i] == name) return i;
    throw std::invalid_argument("FinSemigroup: unknown element name " + name);
  }

  /// Product of a nonempty sequence of element indices.
  int product(const std::vector<int>& seq) const {
    if (seq.empty()) throw std::invalid_argument("FinSemigroup: empty product");
    int acc = seq[0];
    for (std::size_t i = 1; i < seq.size(); ++i) acc = mul(acc, seq[i]);
    return acc;
  }

 private:
  void check_associativity_full() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        int ab = table_[a][b];
        for (int c = 0; c < n_; ++c)
          if (table_[ab][c] != table_[a][table_[b][c]])
            throw std::invalid_argument("FinSemigroup: operation is not associative");
      }
  }

  // Light's test: with G generating, a(gc) == (ag)c for all a, c and g in G
  // implies associativity everywhere.
  void check_associativity_light(const std::vector<int>& gens) const {
    std::vector<bool> reached(n_, false);
    std::queue<int> bfs;
    for (int g : gens) {
      if (g < 0 || g >= n_)
        throw std::invalid_argument("FinSemigroup: generator index out of range");
      if (!reached[g]) {
        reached[g] = true;
        bfs.push(g);
      }
    }
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop();
      for (int g : gens) {
        int y = table_[x][g];
        if (!reached[y]) {
          reached[y] = true;
          bfs.push(y);
        }
      }
    }
    if (!std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }))
      throw std::invalid_argument("FinSemigroup: given set does not generate");
    for (int g : gens)
      for (int a = 0; a < n_; ++a) {
        int ag = table_[a][g];
        for (int c = 0; c < n_; ++c)
          if (table_[ag][c] != table_[a][table_[g][c]])
            throw std::invalid_argument("FinSemigroup: operation is not associative");
      }
  }

  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  int n_;
};

/// The idempotent power of s: first idempotent among s, s^2, ..., s^{|S|+1}.
inline int omega_power_fin(const FinSemigroup& s, int elem) {
  int p = elem;
  for (int k = 0; k <= s.size(); ++k) {
    if (s.mul(p, p) == p) return p;
    p = s.mul(p, elem);
  }
  throw std::logic_error("omega_power_fin: no idempotent power found");
}

/// True iff every product of n elements absorbs on the right: p*y == p.
inline bool satisfies_kn_identity(const FinSemigroup& s, int n) {
  if (n < 1) throw std::invalid_argument("satisfies_kn_identity: n must be positive");
  int sz = s.size();
  std::vector<bool> cur(sz, true);  // length-1 products
  for (int len = 2; len <= n; ++len) {
    std::vector<bool> next(sz, false);
    for (int x = 0; x < sz; ++x)
      if (cur[x])
        for (int y = 0; y < sz; ++y) next[s.mul(x, y)] = true;
    cur = std::move(next);
  }
  for (int p = 0; p < sz; ++p) {
    if (!cur[p]) continue;
    for (int y = 0; y < sz; ++y)
      if (s.mul(p, y) != p) return false;
  }
  return true;
}

/// Partition of element indices compatible with multiplication.  Classes are
/// numbered in order of their least element.
class Congruence {
 public:
  explicit Congruence(std::vector<int> class_of) : class_of_(std::move(class_of)) {
    renumber();
  }

  int class_of(int i) const { return class_of_.at(i); }
  int num_classes() const { return num_classes_; }
  std::size_t size() const { return class_of_.size(); }

  std::vector<std::vector<int>> classes() const {
    std::vector<std::vector<int>> out(num_classes_);
    for (std::size_t i = 0; i < class_of_.size(); ++i)
      out[class_of_[i]].push_back(static_cast<int>(i));
    return out;
  }

  bool related(int i, int j) const { return class_of_[i] == class_of_[j]; }

  /// Checks x ~ x', y ~ y' implies xy ~ x'y' over the given product.
  bool compatible_with(const FinSemigroup& s) const {
    if (size() != static_cast<std::size_t>(s.size())) return false;
    std::vector<int> rep(num_classes_, -1);
    for (int i = 0; i < s.size(); ++i)
      if (rep[class_of_[i]] < 0) rep[class_of_[i]] = i;
    for (int x = 0; x < s.size(); ++x)
      for (int y = 0; y < s.size(); ++y) {
        int expect = class_of_[s.mul(rep[class_of_[x]], rep[class_of_[y]])];
        if (class_of_[s.mul(x, y)] != expect) return false;
      }
    return true;
  }

 private:
  void renumber() {
    std::map<int, int> remap;
    for (int& c : class_of_) {
      auto [it, fresh] = remap.emplace(c, static_cast<int>(remap.size()));
      c = it->second;
    }
    num_classes_ = static_cast<int>(remap.size());
  }

  std::vector<int> class_of_;
  int num_classes_ = 0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Merges towards the least index so that representatives are deterministic.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Smallest congruence containing the given pairs, for an arbitrary product
/// function on {0,...,n-1}.  Work queue of merged pairs; each merge is pushed
/// through left and right multiplication by every element.
inline Congruence congruence_closure_fn(int n, const std::function<int(int, int)>& mul,
                                        const std::vector<std::pair<int, int>>& pairs) {
  detail::UnionFind uf(n);
  std::queue<std::pair<int, int>> work;
  for (auto [x, y] : pairs)
    if (uf.unite(x, y)) work.emplace(x, y);
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop();
    for (int s = 0; s < n; ++s) {
      if (uf.unite(mul(s, x), mul(s, y))) work.emplace(mul(s, x), mul(s, y));
      if (uf.unite(mul(x, s), mul(y, s))) work.emplace(mul(x, s), mul(y, s));
    }
  }
  std::vector<int> class_of(n);
  for (int i = 0; i < n; ++i) class_of[i] = uf.find(i);
  return Congruence(std::move(class_of));
}

inline Congruence congruence_closure(const FinSemigroup& s,
                                     const std::vector<std::pair<int, int>>& pairs) {
  return congruence_closure_fn(
      s.size(), [&s](int a, int b) { return s.mul(a, b); }, pairs);
}

/// Quotient semigroup on congruence classes; errors if the partition is not
/// compatible with multiplication.  Class names come from least representatives.
inline FinSemigroup quotient(const FinSemigroup& s, const Congruence& c) {
  if (c.size() != static_cast<std::size_t>(s.size()))
    throw std::invalid_argument("quotient: partition size mismatch");
  if (!c.compatible_with(s))
    throw std::invalid_argument("quotient: partition is not a congruence");
  int m = c.num_classes();
  std::vector<int> rep(m, -1);
  for (int i = 0; i < s.size(); ++i)
    if (rep[c.class_of(i)] < 0) rep[c.class_of(i)] = i;
  std::vector<std::string> names(m);
  for (int k = 0; k < m; ++k) names[k] = "[" + s.name(rep[k]) + "]";
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = c.class_of(s.mul(rep[a], rep[b]));
  return FinSemigroup(std::move(names), std::move(table));
}

/// Subsemigroup generated by the given elements, as its own table.  Elements
/// are indexed in BFS discovery order and keep their names.
inline FinSemigroup generated_subsemigroup(const FinSemigroup& s,
                                           const std::vector<int>& gens) {
  if (gens.empty())
    throw std::invalid_argument("generated_subsemigroup: no generators");
  std::vector<int> elems;
  std::map<int, int> index;  // element of s -> index in sub
  std::queue<int> work;
  for (int g : gens) {
    if (g < 0 || g >= s.size())
      throw std::invalid_argument("generated_subsemigroup: generator out of range");
    if (index.emplace(g, static_cast<int>(elems.size())).second) {
      elems.push_back(g);
      work.push(g);
    }
  }
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    // Close under products with everything discovered so far.
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (int p : {s.mul(x, elems[i]), s.mul(elems[i], x)}) {
        if (index.emplace(p, static_cast<int>(elems.size())).second) {
          elems.push_back(p);
          work.push(p);
        }
      }
    }
  }
  int m = static_cast<int>(elems.size());
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) names[i] = s.name(elems[i]);
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = index.at(s.mul(elems[a], elems[b]));
  return FinSemigroup(std::move(names), std::move(table));
}

/// True iff some power of the semigroup is a single element: the descending
/// chain of length-k product sets reaches a singleton.
inline bool is_nilpotent(const FinSemigroup& s) {
  int n = s.size();
  std::vector<bool> cur(n, true);
  int count = n;
  for (int k = 1; k <= n + 1; ++k) {
    if (count == 1) return true;
    std::vector<bool> next(n, false);
    int next_count = 0;
    for (int x = 0; x < n; ++x) {
      if (!cur[x]) continue;
      for (int y = 0; y < n; ++y) {
        int p = s.mul(x, y);
        if (!next[p]) {
          next[p] = true;
          ++next_count;
        }
      }
    }
    if (next_count == count && next == cur) return false;  // chain stabilized
    cur = std::move(next);
    count = next_count;
  }
  return count == 1;
}

}  // namespace prok
