// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef REFGAME_RNG_HPP
#define REFGAME_RNG_HPP

#include <cstdint>
#include <string_view>

namespace refgame {

// splitmix64; chosen over std distributions so seeded runs are
// bit-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n == 0 returns 0
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // true with probability p (p in [0,1])
  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0) < p;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Stable derivation of per-agent / per-run seeds from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
  Rng r(master ^ fnv1a64(tag));
  return r.next();
}

}  // namespace refgame

#endif  // REFGAME_RNG_HPP
