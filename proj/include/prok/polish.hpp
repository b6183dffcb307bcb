#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prok/fin_semigroup.hpp"
#include "prok/unary.hpp"

namespace prok {

/// Graded signature: finitely many operation symbols with arities.  Symbols
/// are single letters; the letter 'x' and digits are reserved for variables
/// x1, x2, ... so the two namespaces cannot collide.
class Signature {
 public:
  explicit Signature(std::map<char, int> arities) : arities_(std::move(arities)) {
    for (const auto& [sym, n] : arities_) {
      if (sym == 'x' || (sym >= '0' && sym <= '9'))
        throw std::invalid_argument("Signature: symbol shadows variable syntax");
      if (sym < 'a' || sym > 'z')
        throw std::invalid_argument("Signature: symbols must be lowercase letters");
      if (n < 0) throw std::invalid_argument("Signature: negative arity");
    }
  }

  bool contains(char sym) const { return arities_.count(sym) != 0; }
  int arity(char sym) const {
    auto it = arities_.find(sym);
    if (it == arities_.end())
      throw std::invalid_argument(std::string("Signature: unknown symbol '") + sym + "'");
    return it->second;
  }
  const std::map<char, int>& arities() const { return arities_; }

  /// Symbols of the given arity, in letter order.
  std::vector<char> symbols_of_arity(int n) const {
    std::vector<char> out;
    for (const auto& [sym, a] : arities_)
      if (a == n) out.push_back(sym);
    return out;
  }

 private:
  std::map<char, int> arities_;
};

/// Term tree: variable leaf or operation symbol applied to arity-many
/// children (constants are nullary applications).
struct Term {
  bool is_variable = false;
  int variable = 0;  // 1-based
  char symbol = 0;
  std::vector<Term> children;

  static Term var(int index) {
    if (index < 1) throw std::invalid_argument("Term: variable indices start at 1");
    Term t;
    t.is_variable = true;
    t.variable = index;
    return t;
  }

  static Term app(char symbol, std::vector<Term> children = {}) {
    Term t;
    t.symbol = symbol;
    t.children = std::move(children);
    return t;
  }

  friend bool operator==(const Term&, const Term&) = default;
};

inline int node_count(const Term& t) {
  int n = 1;
  for (const Term& c : t.children) n += node_count(c);
  return n;
}

inline int depth(const Term& t) {
  int d = 0;
  for (const Term& c : t.children) d = std::max(d, depth(c));
  return d + 1;
}

/// Preorder linearization; one token per node, variables written x1, x2, ...
inline std::string encode(const Term& t) {
  std::string out;
  std::function<void(const Term&)> walk = [&](const Term& node) {
    if (node.is_variable) {
      out += "x" + std::to_string(node.variable);
      return;
    }
    out.push_back(node.symbol);
    for (const Term& c : node.children) walk(c);
  };
  walk(t);
  return out;
}

enum class DecodeErrorKind { UnknownSymbol, Truncated, TrailingSurplus };

class DecodeError : public std::runtime_error {
 public:
  DecodeError(DecodeErrorKind kind, std::size_t pos, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        kind_(kind), pos_(pos) {}
  DecodeErrorKind kind() const { return kind_; }
  std::size_t position() const { return pos_; }

 private:
  DecodeErrorKind kind_;
  std::size_t pos_;
};

/// Arity-driven recursive descent; the unique term whose preorder word is
/// the input, with truncation, surplus and unknown symbols reported
/// separately with their positions.
inline Term decode(const std::string& word, const Signature& sig) {
  std::size_t pos = 0;
  std::function<Term()> parse = [&]() -> Term {
    if (pos >= word.size())
      throw DecodeError(DecodeErrorKind::Truncated, pos,
                        "input ends where a term was required");
    char c = word[pos];
    if (c == 'x') {
      std::size_t start = pos++;
      std::string digits;
      while (pos < word.size() && word[pos] >= '0' && word[pos] <= '9')
        digits.push_back(word[pos++]);
      if (digits.empty())
        throw DecodeError(DecodeErrorKind::UnknownSymbol, start,
                          "variable without an index");
      return Term::var(std::stoi(digits));
    }
    if (!sig.contains(c))
      throw DecodeError(DecodeErrorKind::UnknownSymbol, pos,
                        std::string("unknown symbol '") + c + "'");
    ++pos;
    int n = sig.arity(c);
    std::vector<Term> children;
    children.reserve(n);
    for (int i = 0; i < n; ++i) children.push_back(parse());
    return Term::app(c, std::move(children));
  };
  Term t = parse();
  if (pos != word.size())
    throw DecodeError(DecodeErrorKind::TrailingSurplus, pos, "trailing surplus symbols");
  return t;
}

/// Finite algebra for a graded signature: carrier {0..size-1} and an
/// evaluation callback per symbol.
struct TermAlgebra {
  int size = 0;
  std::function<int(char, const std::vector<int>&)> apply;
};

/// Standard recursive evaluation under a variable assignment.
inline int evaluate(const Term& t, const TermAlgebra& algebra,
                    const std::map<int, int>& assignment) {
  if (t.is_variable) {
    auto it = assignment.find(t.variable);
    if (it == assignment.end())
      throw std::invalid_argument("evaluate: unassigned variable x" +
                                  std::to_string(t.variable));
    return it->second;
  }
  std::vector<int> args;
  args.reserve(t.children.size());
  for (const Term& c : t.children) args.push_back(evaluate(c, algebra, assignment));
  return algebra.apply(t.symbol, args);
}

/// The two-point algebra on {a, b} = {0, 1}: symbols of the selected arity
/// flip their last argument, all other symbols are constantly a.
inline TermAlgebra flip_algebra(const Signature& sig, int arity) {
  if (arity < 2) throw std::invalid_argument("flip_algebra: arity must be at least 2");
  TermAlgebra alg;
  alg.size = 2;
  alg.apply = [&sig, arity](char sym, const std::vector<int>& args) {
    if (sig.arity(sym) != arity) return 0;
    return 1 - args.back();
  };
  return alg;
}

struct CollisionTerms {
  Term pattern;  // over variables x1, x2, x3
  Term t_term;
  Term s_term;
};

namespace detail {

inline Term substitute_vars(const Term& t, const std::vector<Term>& images) {
  if (t.is_variable) return images.at(t.variable - 1);
  std::vector<Term> children;
  children.reserve(t.children.size());
  for (const Term& c : t.children) children.push_back(substitute_vars(c, images));
  return Term::app(t.symbol, std::move(children));
}

}  // namespace detail

/// The nested pattern with k applications of an arity-n symbol, its
/// three-fold self-composition t_k, and s_k which wraps t_k once more.
/// The encoding of t_k is verified against the closed-form word
/// u^k (u^k x^{k(n-1)+1})^{k(n-1)+1}.
inline CollisionTerms build_collision_terms(int k, int n, char symbol = 'u') {
  if (k < 1) throw std::invalid_argument("build_collision_terms: k must be positive");
  if (n < 2) throw std::invalid_argument("build_collision_terms: arity must be >= 2");
  Term x = Term::var(1), y = Term::var(2), z = Term::var(3);
  std::vector<Term> inner_args{x};
  for (int i = 0; i < n - 1; ++i) inner_args.push_back(y);
  Term w = Term::app(symbol, inner_args);
  for (int level = 1; level < k; ++level) {
    std::vector<Term> args{w};
    for (int i = 0; i < n - 1; ++i) args.push_back(z);
    w = Term::app(symbol, args);
  }
  CollisionTerms out;
  out.pattern = w;
  Term a = detail::substitute_vars(w, {x, x, x});
  out.t_term = detail::substitute_vars(w, {a, a, a});
  out.s_term = detail::substitute_vars(w, {out.t_term, x, x});

  std::string u(1, symbol);
  int e = k * (n - 1) + 1;
  std::string block;
  for (int i = 0; i < k; ++i) block += u;
  std::string xs;
  for (int i = 0; i < e; ++i) xs += "x1";
  std::string expect;
  for (int i = 0; i < k; ++i) expect += u;
  for (int i = 0; i < e; ++i) expect += block + xs;
  if (encode(out.t_term) != expect)
    throw std::logic_error("build_collision_terms: encoding formula mismatch");
  return out;
}

struct OmegaIdentityViolation {
  int monoid = 0;
  int u = 0, x = 0;
};

struct OmegaIdentityReport {
  int monoids = 0;
  long pairs = 0;
  std::vector<OmegaIdentityViolation> violations;
};

/// Over each finite monoid, both rewritings of the idempotent-power word
/// identity must agree for every pair of elements.
inline void check_omega_power_identity(const FinSemigroup& m, int monoid_index,
                                       OmegaIdentityReport& report) {
  for (int u = 0; u < m.size(); ++u) {
    int uw = omega_power_fin(m, u);
    for (int x = 0; x < m.size(); ++x) {
      int xw1 = m.mul(omega_power_fin(m, x), x);
      int inner = m.mul(uw, xw1);
      int innerw1 = m.mul(omega_power_fin(m, inner), inner);
      int e1 = m.mul(uw, innerw1);
      int e2 = innerw1;
      int e3 = m.mul(m.mul(m.mul(uw, uw), innerw1), omega_power_fin(m, x));
      ++report.pairs;
      if (e1 != e2 || e2 != e3)
        report.violations.push_back({monoid_index, u, x});
    }
  }
}

/// All monoids of self-maps of a set of at most max_points points generated
/// by at most two maps (plus the identity), deduplicated by element set.
inline std::vector<FinSemigroup> self_map_monoid_corpus(int max_points) {
  std::vector<FinSemigroup> corpus;
  std::set<std::set<Transformation>> seen;
  for (int s = 1; s <= max_points; ++s) {
    std::vector<Transformation> maps;
    Transformation cur(s, 0);
    while (true) {
      maps.push_back(cur);
      int i = s - 1;
      while (i >= 0 && cur[i] == s - 1) cur[i--] = 0;
      if (i < 0) break;
      ++cur[i];
    }
    Transformation id(s);
    for (int i = 0; i < s; ++i) id[i] = i;
    for (std::size_t fi = 0; fi < maps.size(); ++fi) {
      for (std::size_t gi = fi; gi < maps.size(); ++gi) {
        std::set<Transformation> elems{id, maps[fi], maps[gi]};
        bool grew = true;
        while (grew) {
          grew = false;
          std::vector<Transformation> snapshot(elems.begin(), elems.end());
          for (const auto& p : snapshot)
            for (const auto& q : snapshot)
              if (elems.insert(compose(p, q)).second) grew = true;
        }
        if (!seen.insert(elems).second) continue;
        std::vector<Transformation> list(elems.begin(), elems.end());
        std::vector<std::string> names;
        std::vector<std::vector<int>> table(list.size(), std::vector<int>(list.size()));
        std::map<Transformation, int> index;
        for (std::size_t i = 0; i < list.size(); ++i) {
          index.emplace(list[i], static_cast<int>(i));
          std::string nm = "(";
          for (int v : list[i]) nm += std::to_string(v);
          names.push_back(nm + ")");
        }
        for (std::size_t i = 0; i < list.size(); ++i)
          for (std::size_t j = 0; j < list.size(); ++j)
            table[i][j] = index.at(compose(list[i], list[j]));
        corpus.emplace_back(std::move(names), std::move(table));
      }
    }
  }
  return corpus;
}

/// The separating multiplication on all self-maps of a finite carrier, the
/// carrier itself, and a zero: maps compose, a map applied to a carrier
/// point evaluates, every other product is zero.  Associativity is verified
/// exhaustively on construction.  The identity self-map is a left identity
/// everywhere and two-sided on maps and zero; carrier points annihilate all
/// maps on the right, so the structure is a semigroup with left identity
/// rather than a monoid.  Word images only ever multiply maps before a
/// final point, which the rules keep exact.
class SeparatingMonoid {
 public:
  explicit SeparatingMonoid(int carrier) : carrier_(carrier) {
    if (carrier < 1 || carrier > 4)
      throw std::invalid_argument("SeparatingMonoid: carrier size out of range");
    int ff = 1;
    for (int i = 0; i < carrier; ++i) ff *= carrier;
    map_count_ = ff;
    elem_offset_ = ff;
    zero_ = ff + carrier;
    size_ = ff + carrier + 1;
    Transformation id(carrier);
    for (int i = 0; i < carrier; ++i) id[i] = i;
    identity_ = map_index(id);
    table_.assign(size_, std::vector<int>(size_, zero_));
    for (int g = 0; g < map_count_; ++g) {
      Transformation tg = map_of(g);
      for (int h = 0; h < map_count_; ++h) table_[g][h] = map_index(compose(tg, map_of(h)));
      for (int s = 0; s < carrier; ++s) table_[g][elem_offset_ + s] = elem_offset_ + tg[s];
    }
    for (int a = 0; a < size_; ++a)
      for (int b = 0; b < size_; ++b)
        for (int c = 0; c < size_; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw std::logic_error("SeparatingMonoid: multiplication is not associative");
  }

  int size() const { return size_; }
  int identity() const { return identity_; }
  int zero() const { return zero_; }
  int mul(int i, int j) const { return table_[i][j]; }
  int element(int point) const { return elem_offset_ + point; }
  bool is_element(int i) const { return i >= elem_offset_ && i < zero_; }
  int point_of(int i) const { return i - elem_offset_; }

  int map_index(const Transformation& t) const {
    int idx = 0;
    for (int v : t) idx = idx * carrier_ + v;
    return idx;
  }

  Transformation map_of(int idx) const {
    Transformation t(carrier_);
    for (int i = carrier_ - 1; i >= 0; --i) {
      t[i] = idx % carrier_;
      idx /= carrier_;
    }
    return t;
  }

 private:
  int carrier_;
  int map_count_ = 0;
  int elem_offset_ = 0;
  int zero_ = 0;
  int size_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
};

/// A unary structure: self-maps for the unary symbols, plus carrier points
/// for the constants.
struct UnaryStructure {
  int size = 0;
  std::map<char, std::vector<int>> unary;     // arity-1 interpretations
  std::map<char, int> constants;              // arity-0 interpretations
};

/// Image of a Polish word in the separating monoid: tokens map to carrier
/// points (variables and constants) or self-maps (unary symbols), multiplied
/// left to right.
inline int polish_image(const std::string& word, const Signature& sig,
                        const UnaryStructure& f, const SeparatingMonoid& m,
                        const std::map<int, int>& assignment) {
  int acc = m.identity();
  std::size_t pos = 0;
  while (pos < word.size()) {
    int token;
    char c = word[pos];
    if (c == 'x') {
      ++pos;
      std::string digits;
      while (pos < word.size() && word[pos] >= '0' && word[pos] <= '9')
        digits.push_back(word[pos++]);
      token = m.element(assignment.at(std::stoi(digits)));
    } else if (sig.arity(c) == 0) {
      token = m.element(f.constants.at(c));
      ++pos;
    } else {
      token = m.map_index(f.unary.at(c));
      ++pos;
    }
    acc = m.mul(acc, token);
  }
  return acc;
}

struct SeparationViolation {
  std::string left, right;
  int expected_left = 0, expected_right = 0;
  int image_left = 0, image_right = 0;
};

struct UnarySeparationReport {
  long pairs = 0;
  long separated_pairs = 0;
  std::vector<SeparationViolation> violations;
};

/// For every term pair distinguished by evaluation in the structure, the
/// Polish images in the separating monoid must land on the corresponding
/// carrier points and therefore differ.
inline void verify_unary_separation(const Signature& sig, const UnaryStructure& f,
                                    const SeparatingMonoid& m,
                                    const std::vector<std::pair<Term, Term>>& pairs,
                                    const std::map<int, int>& assignment,
                                    UnarySeparationReport& report) {
  TermAlgebra alg;
  alg.size = f.size;
  alg.apply = [&f, &sig](char sym, const std::vector<int>& args) {
    if (sig.arity(sym) == 0) return f.constants.at(sym);
    return f.unary.at(sym)[args.at(0)];
  };
  for (const auto& [t1, t2] : pairs) {
    ++report.pairs;
    int v1 = evaluate(t1, alg, assignment);
    int v2 = evaluate(t2, alg, assignment);
    int i1 = polish_image(encode(t1), sig, f, m, assignment);
    int i2 = polish_image(encode(t2), sig, f, m, assignment);
    bool ok = i1 == m.element(v1) && i2 == m.element(v2);
    if (v1 != v2) {
      ++report.separated_pairs;
      ok = ok && i1 != i2;
    }
    if (!ok)
      report.violations.push_back({encode(t1), encode(t2), v1, v2, i1, i2});
  }
}

}  // namespace prok
