#pragma once

#include <vector>

#include "nakct/nakct.hpp"

namespace nakct::fixtures {

// kA_7 / <a2a3a4, a5a6>
inline Algebra lambda_a() { return Algebra::from_kupisch(Kind::Acyclic, {1, 2, 3, 3, 4, 2, 3}); }

// kA~_7 / <a2a3a4, a5a6, a7a1, a1a2a3>
inline Algebra lambda_b() { return Algebra::from_kupisch(Kind::Cyclic, {2, 3, 3, 3, 4, 2, 3}); }

// A_7/R^3 glued with A_9/R^2.
inline Algebra glued15() {
  return Algebra::from_kupisch(Kind::Acyclic, {1, 2, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2});
}

// Self-gluing of glued15.
inline Algebra lambda_c() {
  return Algebra::from_kupisch(Kind::Cyclic, {2, 2, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2});
}

inline std::vector<Indec> mods(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Indec> out;
  for (auto [i, j] : xs) out.push_back({i, j});
  return out;
}

}  // namespace nakct::fixtures
