#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "prok/kword.hpp"
#include "prok/random.hpp"
#include "prok/theta.hpp"

namespace prok {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const ExactRational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Binary-expansion value of an infinite word over {a, b}: digit 0 for a,
/// 1 for b, value sum d_i 2^{-i}.  Exact: preperiod digits plus a geometric
/// series over the period.
inline ExactRational cantor_value(const KWord& x) {
  if (!x.is_omega())
    throw std::invalid_argument("cantor_value: finite words have no expansion");
  for (char c : x.content())
    if (c != 'a' && c != 'b')
      throw std::invalid_argument("cantor_value: requires the alphabet {a,b}");
  const std::string& pre = x.preperiod();
  const std::string& per = x.period();
  BigInt head = 0;
  for (char c : pre) head = head * 2 + (c == 'b' ? 1 : 0);
  BigInt body = 0;
  for (char c : per) body = body * 2 + (c == 'b' ? 1 : 0);
  BigInt per_den = (BigInt(1) << per.size()) - 1;
  // value = (head + body/per_den) / 2^{|pre|}
  ExactRational tail(body, per_den);
  ExactRational value = (ExactRational(head) + tail) / ExactRational(BigInt(1) << pre.size());
  return value;
}

struct KernelMismatch {
  KWord x;
  KWord y;
  bool values_equal = false;
  bool related = false;
};

struct KernelReport {
  std::uint64_t pairs_checked = 0;
  std::vector<KernelMismatch> mismatches;
};

namespace detail {

inline void kernel_probe(const KWord& x, const KWord& y, KernelReport& report) {
  bool eq = cantor_value(x) == cantor_value(y);
  bool rel = swap_tail_related(x, y);
  ++report.pairs_checked;
  if (eq != rel) report.mismatches.push_back({x, y, eq, rel});
}

inline std::vector<KWord> hamming_neighbourhood(const std::vector<KWord>& templates) {
  std::set<KWord> words;
  for (const KWord& w : templates) {
    words.insert(w);
    std::string pre = w.preperiod();
    std::string per = w.period();
    for (std::size_t i = 0; i < pre.size(); ++i) {
      std::string flipped = pre;
      flipped[i] = flipped[i] == 'a' ? 'b' : 'a';
      words.insert(KWord::omega(flipped, per));
    }
    for (std::size_t i = 0; i < per.size(); ++i) {
      std::string flipped = per;
      flipped[i] = flipped[i] == 'a' ? 'b' : 'a';
      words.insert(KWord::omega(pre, flipped));
    }
  }
  return {words.begin(), words.end()};
}

}  // namespace detail

/// Cross-checks that the expansion value identifies two infinite words
/// exactly when the swap-tail congruence does: over a seeded random sample
/// and over all pairs from single-letter perturbations of short templates.
inline KernelReport kernel_crosscheck(std::uint64_t samples, std::uint64_t seed) {
  KernelReport report;
  Rng rng(seed);
  auto random_omega = [&rng]() {
    return KWord::omega(rng.word("ab", rng.below(6)), rng.word("ab", rng.between(1, 4)));
  };
  for (std::uint64_t i = 0; i < samples; ++i) {
    KWord x = random_omega();
    // Mix in near-misses: sometimes pair x with a swap partner candidate.
    KWord y = random_omega();
    detail::kernel_probe(x, y, report);
  }
  std::vector<KWord> templates = {
      KWord::omega("a", "b"),   KWord::omega("b", "a"),  KWord::omega("", "ab"),
      KWord::omega("", "ba"),   KWord::omega("ab", "a"), KWord::omega("ba", "b"),
      KWord::omega("aab", "b"), KWord::omega("abb", "a")};
  std::vector<KWord> adversarial = detail::hamming_neighbourhood(templates);
  for (std::size_t i = 0; i < adversarial.size(); ++i)
    for (std::size_t j = 0; j < adversarial.size(); ++j)
      detail::kernel_probe(adversarial[i], adversarial[j], report);
  return report;
}

/// Exhaustive kernel check over all canonical infinite words with preperiod
/// length <= max_pre and period length <= max_per.
inline KernelReport kernel_exhaustive(std::size_t max_pre, std::size_t max_per) {
  std::set<KWord> words;
  std::vector<std::string> pres{""};
  for (std::size_t len = 1; len <= max_pre; ++len) {
    std::size_t count = std::size_t{1} << len;
    for (std::size_t v = 0; v < count; ++v) {
      std::string w(len, 'a');
      for (std::size_t i = 0; i < len; ++i)
        if ((v >> i) & 1) w[i] = 'b';
      pres.push_back(w);
    }
  }
  std::vector<std::string> pers(pres.begin() + 1, pres.end());
  for (const std::string& pre : pres)
    for (const std::string& per : pers)
      if (per.size() <= max_per) words.insert(KWord::omega(pre, per));

  // Group by value: within a value class everything must be related, across
  // classes nothing may be.
  KernelReport report;
  std::vector<std::pair<ExactRational, KWord>> keyed;
  for (const KWord& w : words) keyed.emplace_back(cantor_value(w), w);
  for (std::size_t i = 0; i < keyed.size(); ++i)
    for (std::size_t j = i + 1; j < keyed.size(); ++j) {
      bool eq = keyed[i].first == keyed[j].first;
      bool rel = swap_tail_related(keyed[i].second, keyed[j].second);
      ++report.pairs_checked;
      if (eq != rel)
        report.mismatches.push_back({keyed[i].second, keyed[j].second, eq, rel});
    }
  return report;
}

}  // namespace prok
