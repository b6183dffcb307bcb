#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "prok/fin_semigroup.hpp"
#include "prok/kword.hpp"

namespace prok {

/// The semigroup of all nonempty words of length <= n over a finite alphabet,
/// multiplying by concatenation truncated to the first n letters.  Elements
/// are indexed in length-lexicographic order.
class KnSemigroup {
 public:
  KnSemigroup(Alphabet alphabet, int n) : alphabet_(std::move(alphabet)), n_(n) {
    if (n < 1) throw std::invalid_argument("KnSemigroup: n must be positive");
    std::uint64_t m = alphabet_.size();
    // offsets_[len] = number of words of length in [1, len]
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t pow = m;
    for (int len = 1; len <= n; ++len) {
      offsets_[len] = offsets_[len - 1] + pow;
      pow *= m;
    }
    size_ = static_cast<int>(offsets_[n_]);
  }

  const Alphabet& alphabet() const { return alphabet_; }
  int n() const { return n_; }
  int size() const { return size_; }

  int index_of(const std::string& w) const {
    if (w.empty() || w.size() > static_cast<std::size_t>(n_))
      throw std::invalid_argument("KnSemigroup: word length out of range");
    std::uint64_t v = 0;
    for (char c : w) v = v * alphabet_.size() + alphabet_.index_of(c);
    return static_cast<int>(offsets_[w.size() - 1] + v);
  }

  std::string word_of(int idx) const {
    if (idx < 0 || idx >= size_)
      throw std::invalid_argument("KnSemigroup: index out of range");
    int len = 1;
    while (static_cast<std::uint64_t>(idx) >= offsets_[len]) ++len;
    std::uint64_t v = idx - offsets_[len - 1];
    std::string w(len, alphabet_.letter(0));
    for (int i = len - 1; i >= 0; --i) {
      w[i] = alphabet_.letter(v % alphabet_.size());
      v /= alphabet_.size();
    }
    return w;
  }

  /// Concatenation truncated to n letters, on indices.
  int mul(int i, int j) const {
    std::string a = word_of(i);
    if (a.size() == static_cast<std::size_t>(n_)) return i;
    std::string b = word_of(j);
    a += b;
    if (a.size() > static_cast<std::size_t>(n_)) a.resize(n_);
    return index_of(a);
  }

  /// Index of the first min(n, length) letters of a KWord.
  int project(const KWord& x) const { return index_of(truncate(x, n_)); }

  /// Materialized table as a FinSemigroup (use only for moderate n).
  FinSemigroup to_fin() const {
    std::vector<std::string> names(size_);
    for (int i = 0; i < size_; ++i) names[i] = word_of(i);
    std::vector<std::vector<int>> table(size_, std::vector<int>(size_));
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) table[i][j] = mul(i, j);
    std::vector<int> gens;
    for (std::size_t a = 0; a < alphabet_.size(); ++a)
      gens.push_back(static_cast<int>(a));
    return FinSemigroup(std::move(names), std::move(table), gens);
  }

 private:
  Alphabet alphabet_;
  int n_;
  int size_;
  std::vector<std::uint64_t> offsets_;  // offsets_[len] = # words of length <= len
};

}  // namespace prok
