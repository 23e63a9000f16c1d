// Random rational evaluation points for numeric re-checks. The seed comes
// from QGRAFT_SEED when set.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "qgraft/scalar.hpp"

namespace qgraft {

inline std::uint64_t oracle_seed() {
  if (const char* env = std::getenv("QGRAFT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 20240611;
}

// Points s0 = a/b away from 0 and ±1, where q-integers of small order vanish.
inline std::vector<Rational> random_eval_points(std::size_t count, std::uint64_t salt = 0) {
  std::mt19937_64 rng(oracle_seed() ^ (salt * 0x9e3779b97f4a7c15ULL));
  std::uniform_int_distribution<int> num(2, 29), den(1, 11), sign(0, 1);
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational s0(num(rng), den(rng));
    s0.canonicalize();
    if (sign(rng)) s0 = -s0;
    if (abs(s0) == 1) continue;
    bool dup = false;
    for (auto const& x : out) dup = dup || x == s0;
    if (!dup) out.push_back(s0);
  }
  return out;
}

}  // namespace qgraft
