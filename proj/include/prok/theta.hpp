#pragma once

#include <stdexcept>

#include "prok/kword.hpp"

namespace prok {

namespace detail {

inline void require_ab(const KWord& x) {
  for (char c : x.content())
    if (c != 'a' && c != 'b')
      throw std::invalid_argument("decider requires the two-letter alphabet {a,b}");
}

}  // namespace detail

/// The closed congruence generated by the pair (ab^w, ba^w) on words over
/// {a,b}: the diagonal plus all pairs {p.xy^w, p.yx^w} with x, y the two
/// distinct letters and p any finite (possibly empty) word.
inline bool swap_tail_related(const KWord& x, const KWord& y) {
  detail::require_ab(x);
  detail::require_ab(y);
  if (x == y) return true;
  if (!x.is_omega() || !y.is_omega()) return false;
  const std::string& px = x.preperiod();
  const std::string& py = y.preperiod();
  const std::string& qx = x.period();
  const std::string& qy = y.period();
  if (qx.size() != 1 || qy.size() != 1 || qx[0] == qy[0]) return false;
  if (px.empty() || py.empty() || px.size() != py.size()) return false;
  // Canonical forms of p.xy^w and p.yx^w are (p+x, y) and (p+y, x).
  return px.back() == qy[0] && py.back() == qx[0] &&
         px.compare(0, px.size() - 1, py, 0, py.size() - 1) == 0;
}

/// The fully invariant closed congruence generated by the family
/// (ab^n.ab^w, ab^{n+1}.a^w): finite words are singleton classes; two
/// infinite words are related iff their shortest full-content prefixes agree.
inline bool content_prefix_related(const KWord& x, const KWord& y) {
  detail::require_ab(x);
  detail::require_ab(y);
  if (x == y) return true;
  if (!x.is_omega() || !y.is_omega()) return false;
  return content_prefix(x) == content_prefix(y);
}

}  // namespace prok
