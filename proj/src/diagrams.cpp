#include "supercup/diagrams.hpp"

#include <algorithm>
#include <functional>

namespace supercup {

CupDiagram cup_diagram(const WeightDiagram& d) {
  std::vector<Arc> arcs;
  std::set<Int> used;  // endpoints of drawn arcs
  // right-to-left over the v's: every v to the right is already matched,
  // so the scan only ever has to skip cores and used endpoints
  for (auto it = d.vees.rbegin(); it != d.vees.rend(); ++it) {
    Int a = *it;
    Int b = a + 1;
    while (d.is_core(b) || used.count(b)) ++b;
    arcs.push_back({a, b});
    used.insert(a);
    used.insert(b);
  }
  std::sort(arcs.begin(), arcs.end());
  return CupDiagram{std::move(arcs), d};
}

namespace {

Sector build_sector(const std::vector<Arc>& arcs, size_t& i) {
  Sector s;
  s.outer = arcs[i];
  s.begin = arcs[i].left;
  s.end = arcs[i].right;
  ++i;
  while (i < arcs.size() && arcs[i].right < s.outer.right) {
    s.nested.push_back(build_sector(arcs, i));
  }
  return s;
}

}  // namespace

std::vector<Sector> sectors(const CupDiagram& c) {
  std::vector<Sector> out;
  size_t i = 0;
  while (i < c.arcs.size()) out.push_back(build_sector(c.arcs, i));
  return out;
}

namespace {

PlanarTree tree_of(const Sector& s) {
  PlanarTree t;
  for (const auto& child : s.nested) t.children.push_back(tree_of(child));
  return t;
}

Int free_positions_between(const WeightDiagram& d, Int a, Int b) {
  Int count = 0;
  for (Int p = a + 1; p < b; ++p)
    if (!d.is_core(p)) ++count;
  return count;
}

}  // namespace

MarkedSpacedForest to_spaced_forest(const CupDiagram& c) {
  MarkedSpacedForest f;
  f.cross_positions = c.base.crosses;
  f.circle_positions = c.base.circles;
  f.m = c.base.m;
  f.n = c.base.n;
  std::vector<Sector> secs = sectors(c);
  for (size_t i = 0; i < secs.size(); ++i) {
    f.trees.push_back(tree_of(secs[i]));
    if (i == 0)
      f.gaps.push_back(secs[0].begin);  // d0: absolute position of the leftmost root
    else
      f.gaps.push_back(free_positions_between(c.base, secs[i - 1].end, secs[i].begin));
  }
  return f;
}

namespace {

// Pair the free slots of one sector according to the tree shape: the root
// takes the first and last slot, the children split the interior.
void place_tree(const PlanarTree& t, const std::vector<Int>& slots, size_t begin,
                std::vector<Arc>& arcs) {
  size_t total = 2 * static_cast<size_t>(t.size());
  arcs.push_back({slots[begin], slots[begin + total - 1]});
  size_t at = begin + 1;
  for (const auto& c : t.children) {
    place_tree(c, slots, at, arcs);
    at += 2 * static_cast<size_t>(c.size());
  }
}

}  // namespace

CupDiagram forest_to_cups(const MarkedSpacedForest& f) {
  std::set<Int> cores = f.cross_positions;
  cores.insert(f.circle_positions.begin(), f.circle_positions.end());
  auto next_free = [&](Int p) {
    while (cores.count(p)) ++p;
    return p;
  };

  std::vector<Arc> arcs;
  Int cursor = 0;
  for (size_t i = 0; i < f.trees.size(); ++i) {
    if (i == 0) {
      cursor = f.gaps[0];
      if (cores.count(cursor))
        throw ValidationError("spaced forest: leftmost root sits on a core symbol");
    } else {
      // skip gaps[i] free positions between the sectors
      for (Int skipped = 0; skipped < f.gaps[i]; ++skipped) cursor = next_free(cursor) + 1;
      cursor = next_free(cursor);
    }
    int sz = 2 * f.trees[i].size();
    std::vector<Int> slots;
    Int p = cursor;
    for (int s = 0; s < sz; ++s) {
      p = next_free(p);
      slots.push_back(p);
      ++p;
    }
    place_tree(f.trees[i], slots, 0, arcs);
    cursor = slots.back() + 1;
  }
  std::sort(arcs.begin(), arcs.end());

  std::set<Int> vees;
  for (const Arc& a : arcs) vees.insert(a.left);
  WeightDiagram base(std::move(vees), f.cross_positions, f.circle_positions, f.m, f.n);
  return CupDiagram{std::move(arcs), std::move(base)};
}

WeightDiagram dual_diagram(const CupDiagram& c) {
  const Int r = c.base.m - c.base.n;
  auto reflect = [r](Int s) { return 1 - r - s; };
  std::set<Int> vees, crosses, circles;
  for (const Arc& a : c.arcs) vees.insert(reflect(a.right));  // v moved to the arc's far end
  for (Int x : c.base.crosses) crosses.insert(reflect(x));
  for (Int o : c.base.circles) circles.insert(reflect(o));
  return WeightDiagram(std::move(vees), std::move(crosses), std::move(circles), c.base.m,
                       c.base.n);
}

MarkedSpacedForest forest_mirror(const MarkedSpacedForest& f) {
  return to_spaced_forest(cup_diagram(dual_diagram(forest_to_cups(f))));
}

bool is_oriented(const CupDiagram& nu, const WeightDiagram& lambda) {
  if (nu.base.crosses != lambda.crosses || nu.base.circles != lambda.circles) return false;
  for (const Arc& a : nu.arcs) {
    if (lambda.is_core(a.left) || lambda.is_core(a.right)) return false;
    int vees = (lambda.vees.count(a.left) ? 1 : 0) + (lambda.vees.count(a.right) ? 1 : 0);
    if (vees != 1) return false;
  }
  // nesting coherence: a clockwise cup (v on the right endpoint) cannot
  // contain an anticlockwise one.  Without this, V([-4,-5]) of GL(2|2)
  // would pick up a fifth factor [-6,-6]; the dimension count
  // dim V([0,0]) = 16 = 1 + 14 + 1 pins the rule down.
  for (const Arc& outer : nu.arcs) {
    if (!lambda.vees.count(outer.right)) continue;
    for (const Arc& inner : nu.arcs)
      if (outer.left < inner.left && inner.right < outer.right &&
          lambda.vees.count(inner.left))
        return false;
  }
  return true;
}

}  // namespace supercup
