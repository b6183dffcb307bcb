#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace prok {

/// Ordered finite alphabet of single-character letters.
class Alphabet {
 public:
  explicit Alphabet(std::string_view letters) : letters_(letters) {
    if (letters_.empty())
      throw std::invalid_argument("Alphabet: must contain at least one letter");
    std::set<char> seen(letters_.begin(), letters_.end());
    if (seen.size() != letters_.size())
      throw std::invalid_argument("Alphabet: letters must be pairwise distinct");
  }

  std::size_t size() const { return letters_.size(); }
  char letter(std::size_t i) const { return letters_.at(i); }
  const std::string& letters() const { return letters_; }

  bool contains(char c) const {
    return letters_.find(c) != std::string::npos;
  }

  std::size_t index_of(char c) const {
    auto pos = letters_.find(c);
    if (pos == std::string::npos)
      throw std::invalid_argument(std::string("Alphabet: unknown letter '") + c + "'");
    return pos;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

/// Position-tagged parse failure for word literals.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// A word of the free pro-K model: either a nonempty finite word or an
/// eventually periodic right-infinite word, kept in canonical form
/// (minimal period, then minimal preperiod).  Values are immutable.
class KWord {
 public:
  static KWord finite(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("KWord: empty finite word");
    KWord x;
    x.finite_ = true;
    x.pre_ = std::string(w);
    return x;
  }

  /// Canonical representative of the infinite word pre.per.per...
  static KWord omega(std::string_view pre, std::string_view per) {
    if (per.empty()) throw std::invalid_argument("KWord: empty period");
    KWord x;
    x.finite_ = false;
    x.pre_ = std::string(pre);
    x.per_ = std::string(per);
    x.normalize();
    return x;
  }

  bool is_finite() const { return finite_; }
  bool is_omega() const { return !finite_; }

  const std::string& word() const {
    if (!finite_) throw std::logic_error("KWord::word: not a finite word");
    return pre_;
  }
  const std::string& preperiod() const {
    if (finite_) throw std::logic_error("KWord::preperiod: finite word");
    return pre_;
  }
  const std::string& period() const {
    if (finite_) throw std::logic_error("KWord::period: finite word");
    return per_;
  }

  /// Number of letters; only meaningful for finite words.
  std::size_t length() const {
    if (!finite_) throw std::logic_error("KWord::length: infinite word");
    return pre_.size();
  }

  /// Letter at position i (0-based); valid for all i on infinite words.
  char letter_at(std::size_t i) const {
    if (i < pre_.size()) return pre_[i];
    if (finite_) throw std::out_of_range("KWord::letter_at: past end");
    return per_[(i - pre_.size()) % per_.size()];
  }

  /// Set of letters occurring in the word.
  std::set<char> content() const {
    std::set<char> c(pre_.begin(), pre_.end());
    c.insert(per_.begin(), per_.end());
    return c;
  }

  friend bool operator==(const KWord&, const KWord&) = default;
  friend auto operator<=>(const KWord&, const KWord&) = default;

  /// Literal syntax: `abba`, `a(b)^w`, `(ab)^w`.
  std::string to_string() const {
    if (finite_) return pre_;
    return pre_ + "(" + per_ + ")^w";
  }

  static KWord parse(std::string_view s) {
    std::size_t i = 0;
    auto is_letter = [](char c) { return c >= 'a' && c <= 'z'; };
    std::string head;
    while (i < s.size() && is_letter(s[i])) head.push_back(s[i++]);
    if (i == s.size()) {
      if (head.empty()) throw ParseError("empty word literal", 0);
      return finite(head);
    }
    if (s[i] != '(') throw ParseError("unexpected character in word literal", i);
    ++i;
    std::string per;
    while (i < s.size() && is_letter(s[i])) per.push_back(s[i++]);
    if (per.empty()) throw ParseError("empty period", i);
    if (s.substr(i, 3) != ")^w")
      throw ParseError("expected \")^w\" after period", i);
    i += 3;
    if (i != s.size()) throw ParseError("trailing characters after omega literal", i);
    return omega(head, per);
  }

 private:
  KWord() = default;

  void normalize() {
    // Minimal period: replace the period by its primitive root.
    std::size_t n = per_.size();
    for (std::size_t d = 1; d <= n / 2; ++d) {
      if (n % d != 0) continue;
      bool ok = true;
      for (std::size_t i = d; i < n && ok; ++i) ok = per_[i] == per_[i % d];
      if (ok) {
        per_.resize(d);
        break;
      }
    }
    // Minimal preperiod: absorb trailing preperiod letters that match the
    // period's last letter, rotating the period as we go.
    while (!pre_.empty() && pre_.back() == per_.back()) {
      pre_.pop_back();
      per_ = per_.back() + per_.substr(0, per_.size() - 1);
    }
  }

  bool finite_ = true;
  std::string pre_;  // finite word, or preperiod
  std::string per_;  // empty iff finite
};

/// Canonical form of pre.per.per... (same value as KWord::omega).
inline KWord normalize(std::string_view pre, std::string_view per) {
  return KWord::omega(pre, per);
}

/// Product in the pro-K model: infinite words are left zeros, otherwise
/// concatenation.
inline KWord multiply(const KWord& x, const KWord& y) {
  if (x.is_omega()) return x;
  if (y.is_finite()) return KWord::finite(x.word() + y.word());
  return KWord::omega(x.word() + y.preperiod(), y.period());
}

/// Idempotent power: the limit of x^{k!}.
inline KWord omega_power(const KWord& x) {
  if (x.is_omega()) return x;
  return KWord::omega("", x.word());
}

/// x^k by iterated multiplication (k >= 1).
inline KWord power(const KWord& x, std::size_t k) {
  if (k == 0) throw std::invalid_argument("power: exponent must be positive");
  KWord acc = x;
  for (std::size_t i = 1; i < k; ++i) acc = multiply(acc, x);
  return acc;
}

/// Shortest prefix whose letter set equals the whole content; always finite.
inline std::string content_prefix(const KWord& x) {
  std::set<char> need = x.content();
  std::set<char> seen;
  std::string out;
  for (std::size_t i = 0;; ++i) {
    char c = x.letter_at(i);
    out.push_back(c);
    seen.insert(c);
    if (seen == need) return out;
  }
}

/// First min(n, length) letters; always n letters for infinite words.
inline std::string truncate(const KWord& x, std::size_t n) {
  if (n == 0) throw std::invalid_argument("truncate: n must be positive");
  std::string out;
  std::size_t limit = x.is_finite() ? std::min(n, x.length()) : n;
  out.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) out.push_back(x.letter_at(i));
  return out;
}

using Substitution = std::map<char, KWord>;

namespace detail {

inline const KWord& image_of(const Substitution& images, char c) {
  auto it = images.find(c);
  if (it == images.end())
    throw std::invalid_argument(std::string("substitute: no image for letter '") + c + "'");
  return it->second;
}

}  // namespace detail

/// Homomorphic extension of a letter substitution.  An infinite image
/// encountered along the expansion absorbs everything after it.
inline KWord substitute(const KWord& x, const Substitution& images) {
  if (x.is_finite()) {
    const std::string& w = x.word();
    std::string acc;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const KWord& img = detail::image_of(images, w[i]);
      if (img.is_omega())
        return KWord::omega(acc + img.preperiod(), img.period());
      acc += img.word();
    }
    return KWord::finite(acc);
  }
  std::string head;
  for (char c : x.preperiod()) {
    const KWord& img = detail::image_of(images, c);
    if (img.is_omega())
      return KWord::omega(head + img.preperiod(), img.period());
    head += img.word();
  }
  std::string body;
  for (char c : x.period()) {
    const KWord& img = detail::image_of(images, c);
    if (img.is_omega())
      return KWord::omega(head + body + img.preperiod(), img.period());
    body += img.word();
  }
  return KWord::omega(head, body);
}

}  // namespace prok
