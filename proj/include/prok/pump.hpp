#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "prok/kword.hpp"

namespace prok {

/// Exponent of a pump atom: a fixed single power, the running parameter k,
/// or an infinite repetition closing the word.
enum class PumpExp { One, K, Omega };

struct PumpAtom {
  std::string base;
  PumpExp exp = PumpExp::One;

  friend bool operator==(const PumpAtom&, const PumpAtom&) = default;
};

/// A word template x(k) = w1^{e1} ... wm^{em} with exponents in {1, k, w}.
/// At most one omega atom, and it must be final.  Every template evaluates
/// at each integer k >= 1 to a KWord, and its k -> infinity limit is the
/// KWord obtained by turning the first k-atom into an infinite tail.
class PumpTemplate {
 public:
  PumpTemplate() = default;
  explicit PumpTemplate(std::vector<PumpAtom> atoms) : atoms_(std::move(atoms)) {
    validate();
  }

  const std::vector<PumpAtom>& atoms() const { return atoms_; }

  bool has_k_atom() const {
    for (const auto& a : atoms_)
      if (a.exp == PumpExp::K) return true;
    return false;
  }

  /// Length of the base of the first k-atom (0 if none).
  std::size_t k_base_length() const {
    for (const auto& a : atoms_)
      if (a.exp == PumpExp::K) return a.base.size();
    return 0;
  }

  KWord eval(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("PumpTemplate::eval: k must be >= 1");
    std::string head;
    for (const auto& a : atoms_) {
      switch (a.exp) {
        case PumpExp::One:
          head += a.base;
          break;
        case PumpExp::K:
          for (std::size_t i = 0; i < k; ++i) head += a.base;
          break;
        case PumpExp::Omega:
          return KWord::omega(head, a.base);
      }
    }
    if (head.empty())
      throw std::invalid_argument("PumpTemplate::eval: empty value");
    return KWord::finite(head);
  }

  /// The limit as k -> infinity: the first k-atom becomes the periodic tail,
  /// absorbing everything after it.  Constant templates are their own limit.
  KWord limit() const {
    std::string head;
    for (const auto& a : atoms_) {
      switch (a.exp) {
        case PumpExp::One:
          head += a.base;
          break;
        case PumpExp::K:
          return KWord::omega(head, a.base);
        case PumpExp::Omega:
          return KWord::omega(head, a.base);
      }
    }
    if (head.empty())
      throw std::invalid_argument("PumpTemplate::limit: empty value");
    return KWord::finite(head);
  }

  /// Constant template holding a fixed KWord.
  static PumpTemplate constant(const KWord& w) {
    std::vector<PumpAtom> atoms;
    if (w.is_finite()) {
      atoms.push_back({w.word(), PumpExp::One});
    } else {
      if (!w.preperiod().empty()) atoms.push_back({w.preperiod(), PumpExp::One});
      atoms.push_back({w.period(), PumpExp::Omega});
    }
    return PumpTemplate(std::move(atoms));
  }

  friend bool operator==(const PumpTemplate&, const PumpTemplate&) = default;

 private:
  void validate() const {
    if (atoms_.empty()) throw std::invalid_argument("PumpTemplate: no atoms");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (atoms_[i].base.empty())
        throw std::invalid_argument("PumpTemplate: empty atom base");
      if (atoms_[i].exp == PumpExp::Omega && i + 1 != atoms_.size())
        throw std::invalid_argument("PumpTemplate: omega atom must be final");
    }
  }

  std::vector<PumpAtom> atoms_;
};

/// Verifies the convergence guarantee truncate(eval(t,k), m) ==
/// truncate(limit(t), m) whenever k * |base| >= m, over k = 1..k_max.
inline bool check_template_convergence(const PumpTemplate& t, std::size_t k_max) {
  KWord lim = t.limit();
  if (!t.has_k_atom()) {
    for (std::size_t k = 1; k <= k_max; ++k)
      if (t.eval(k) != lim) return false;
    return true;
  }
  std::size_t base = t.k_base_length();
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::size_t m = k * base;
    if (truncate(t.eval(k), m) != truncate(lim, m)) return false;
  }
  return true;
}

}  // namespace prok
