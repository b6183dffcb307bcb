#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "prok/fin_semigroup.hpp"

namespace prok {

struct NilpotencyViolation {
  std::string s;
  std::string t;
  std::string reason;
};

struct NilpotencySweepReport {
  int total_pairs = 0;
  int hypothesis_pairs = 0;
  std::vector<std::pair<std::string, std::string>> pairs;  // those meeting the hypothesis
  std::vector<NilpotencyViolation> violations;
};

/// For every pair (s, t) with s.t^w == t.s^w in a semigroup satisfying the
/// length-n right-absorption identity: the subsemigroup generated by {s, t}
/// must be nilpotent, the idempotent powers must agree, and u s v == u t v
/// for all factorizations with n-1 total factors of s and t around the hole.
inline NilpotencySweepReport nilpotency_sweep(const FinSemigroup& sg, int n) {
  if (!satisfies_kn_identity(sg, n))
    throw std::invalid_argument(
        "nilpotency_sweep: semigroup does not satisfy the length-" + std::to_string(n) +
        " absorption identity");
  NilpotencySweepReport report;
  std::vector<int> omega(sg.size());
  for (int i = 0; i < sg.size(); ++i) omega[i] = omega_power_fin(sg, i);

  auto eval_word = [&](std::uint32_t bits, int from, int to, int s, int t,
                       int seed) {
    // Product of w[from..to) with letters s/t chosen by bits, continuing an
    // existing partial product (seed = -1 for none).
    int acc = seed;
    for (int i = from; i < to; ++i) {
      int letter = ((bits >> i) & 1) ? t : s;
      acc = acc < 0 ? letter : sg.mul(acc, letter);
    }
    return acc;
  };

  for (int s = 0; s < sg.size(); ++s) {
    for (int t = 0; t < sg.size(); ++t) {
      ++report.total_pairs;
      if (sg.mul(s, omega[t]) != sg.mul(t, omega[s])) continue;
      ++report.hypothesis_pairs;
      report.pairs.emplace_back(sg.name(s), sg.name(t));
      FinSemigroup sub = generated_subsemigroup(sg, {s, t});
      if (!is_nilpotent(sub))
        report.violations.push_back(
            {sg.name(s), sg.name(t), "generated subsemigroup is not nilpotent"});
      if (omega[s] != omega[t])
        report.violations.push_back(
            {sg.name(s), sg.name(t), "idempotent powers differ"});
      // Word-level exchange: u s v == u t v over all 2^(n-1) letter choices
      // and all split points.
      int len = n - 1;
      for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
        for (int split = 0; split <= len; ++split) {
          int u = eval_word(bits, 0, split, s, t, -1);
          int lhs = eval_word(bits, split, len, s, t, u < 0 ? s : sg.mul(u, s));
          int rhs = eval_word(bits, split, len, s, t, u < 0 ? t : sg.mul(u, t));
          if (lhs != rhs) {
            report.violations.push_back(
                {sg.name(s), sg.name(t),
                 "exchange fails at factorization " + std::to_string(bits) + "/" +
                     std::to_string(split)});
            bits = (1u << len) - 1;  // one violation per pair is enough
            break;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace prok
