// testutil.hpp -- seeded random generators shared by the test suites.

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "supercup/functors.hpp"
#include "supercup/weights.hpp"

namespace supercup::testutil {

using Rng = std::mt19937_64;

inline Int pick(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline SuperWeight random_weight(Rng& rng, int m, int n, Int span = 6) {
  std::vector<Int> top(m), bottom(n);
  for (auto& x : top) x = pick(rng, -span, span);
  for (auto& x : bottom) x = pick(rng, -span, span);
  std::sort(top.begin(), top.end(), std::greater<>());
  std::sort(bottom.begin(), bottom.end(), std::greater<>());
  return SuperWeight(m, n, std::move(top), std::move(bottom));
}

// distinct positions for n vees and m-n crosses; requires m >= n
inline SuperWeight random_max_atypical(Rng& rng, int m, int n, Int span = 8) {
  std::vector<Int> all;
  for (Int p = -span; p <= span; ++p) all.push_back(p);
  std::shuffle(all.begin(), all.end(), rng);
  std::set<Int> vees(all.begin(), all.begin() + n);
  std::set<Int> crosses(all.begin() + n, all.begin() + m);
  return diagram_to_weight(WeightDiagram(std::move(vees), std::move(crosses), {}, m, n));
}

// all vees strictly left of all crosses
inline SuperWeight random_stable(Rng& rng, int m, int n, Int span = 6) {
  std::set<Int> crosses, vees;
  while (static_cast<int>(crosses.size()) < m - n) crosses.insert(pick(rng, 0, span));
  Int top = crosses.empty() ? span : *crosses.begin();
  while (static_cast<int>(vees.size()) < n) vees.insert(pick(rng, top - span - n, top - 1));
  return diagram_to_weight(WeightDiagram(std::move(vees), std::move(crosses), {}, m, n));
}

inline BlockLabel random_block(Rng& rng, int m, int n, Int span = 6) {
  std::set<Int> crosses;
  while (static_cast<int>(crosses.size()) < m - n) crosses.insert(pick(rng, -span, span));
  return BlockLabel{std::move(crosses), {}};
}

inline std::vector<Int> random_partition(Rng& rng, int max_parts, Int max_entry) {
  std::vector<Int> p(max_parts);
  for (auto& x : p) x = pick(rng, 0, max_entry);
  std::sort(p.begin(), p.end(), std::greater<>());
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace supercup::testutil
