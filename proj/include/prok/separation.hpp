#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "prok/derivation.hpp"
#include "prok/fin_semigroup.hpp"
#include "prok/kn_semigroup.hpp"
#include "prok/kword.hpp"

namespace prok {

/// Finite-quotient separation: at each level n the congruence on the
/// truncated-word semigroup generated by truncations of substitution
/// instances of the given pairs, substitution images running over all words
/// of length <= subst_depth in length-lexicographic order.
class TruncationSeparator {
 public:
  TruncationSeparator(std::vector<KPair> generators, int n_max, int subst_depth,
                      Alphabet alphabet = Alphabet("ab"))
      : alphabet_(std::move(alphabet)), n_max_(n_max) {
    if (n_max < 1) throw std::invalid_argument("TruncationSeparator: n_max must be >= 1");
    if (subst_depth < 1)
      throw std::invalid_argument("TruncationSeparator: depth must be >= 1");
    std::vector<std::string> images;
    std::string letters = alphabet_.letters();
    std::vector<std::string> frontier{""};
    for (int len = 1; len <= subst_depth; ++len) {
      std::vector<std::string> next;
      for (const auto& w : frontier)
        for (char c : letters) next.push_back(w + c);
      for (const auto& w : next) images.push_back(w);
      frontier = std::move(next);
    }

    for (int n = 1; n <= n_max; ++n) {
      KnSemigroup kn(alphabet_, n);
      std::set<std::pair<int, int>> instances;
      for (const auto& [g1, g2] : generators) {
        for (const std::string& ia : images) {
          for (const std::string& ib : images) {
            Substitution s{{'a', KWord::finite(ia)}, {'b', KWord::finite(ib)}};
            int p = kn.project(substitute(g1, s));
            int q = kn.project(substitute(g2, s));
            if (p != q) instances.emplace(std::min(p, q), std::max(p, q));
          }
        }
      }
      std::vector<std::pair<int, int>> pairs(instances.begin(), instances.end());
      congruences_.push_back(congruence_closure_fn(
          kn.size(), [&kn](int a, int b) { return kn.mul(a, b); }, pairs));
      levels_.push_back(std::move(kn));
    }
  }

  int n_max() const { return n_max_; }

  /// Whether level n (1-based) separates the truncations of x and y.
  bool separates_at(int n, const KWord& x, const KWord& y) const {
    const KnSemigroup& kn = levels_.at(n - 1);
    const Congruence& c = congruences_.at(n - 1);
    return !c.related(kn.project(x), kn.project(y));
  }

  /// Least level separating x from y, if any within the bound.
  std::optional<int> least_separating_level(const KWord& x, const KWord& y) const {
    for (int n = 1; n <= n_max_; ++n)
      if (separates_at(n, x, y)) return n;
    return std::nullopt;
  }

 private:
  Alphabet alphabet_;
  int n_max_;
  std::vector<KnSemigroup> levels_;
  std::vector<Congruence> congruences_;
};

/// Least level n <= n_max at which the truncation congruence generated by
/// the given pairs separates x from y, if any.  One-shot form; build a
/// TruncationSeparator directly to query many pairs against one closure.
inline std::optional<int> separation_search(const KWord& x, const KWord& y,
                                            const std::vector<KPair>& generators,
                                            int n_max, int subst_depth) {
  TruncationSeparator separator(generators, n_max, subst_depth);
  return separator.least_separating_level(x, y);
}

/// The defining relation family of the fully invariant congruence, as a
/// generator list for separation experiments.
inline std::vector<KPair> content_prefix_generators(int count) {
  std::vector<KPair> out;
  for (int n = 1; n <= count; ++n) {
    std::string bs(n, 'b');
    out.emplace_back(KWord::omega("a" + bs + "a", "b"), KWord::omega("a" + bs + "b", "a"));
  }
  return out;
}

}  // namespace prok
