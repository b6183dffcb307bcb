#pragma once

#include <cstdint>
#include <string>

namespace prok {

/// Deterministic splitmix64 stream.  Used instead of <random> distributions
/// so that seeded reports are byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Uniform value in [lo, hi] inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  bool coin() { return (next() & 1) != 0; }

  /// Random word of the given length over the alphabet letters.
  std::string word(const std::string& letters, std::size_t len) {
    std::string out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
      out.push_back(letters[below(letters.size())]);
    return out;
  }

 private:
  std::uint64_t state_;
};

}  // namespace prok
