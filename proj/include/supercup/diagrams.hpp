// diagrams.hpp -- cup diagrams over weight diagrams, sector extraction,
// marked spaced forests and orientedness of superimposed diagrams.

#pragma once

#include <vector>

#include "supercup/weights.hpp"

namespace supercup {

struct Arc {
  Int left = 0, right = 0;
  bool operator==(const Arc&) const = default;
};

inline bool operator<(const Arc& a, const Arc& b) {
  if (a.left != b.left) return a.left < b.left;
  return a.right < b.right;
}

// Non-crossing arcs over a weight diagram.  Every v is the left endpoint of
// exactly one arc, every right endpoint carries ^ in the base, and arcs skip
// core symbols.  |arcs| = atypicality.
struct CupDiagram {
  std::vector<Arc> arcs;  // sorted by left endpoint
  WeightDiagram base;

  bool operator==(const CupDiagram&) const = default;
};

// An outermost arc together with everything nested below it.
struct Sector {
  Int begin = 0, end = 0;  // the interval [a_j, b_j] on the number line
  Arc outer;
  std::vector<Sector> nested;  // direct children, left to right

  bool operator==(const Sector&) const = default;
};

// Rooted planar tree, shape only; node positions are recovered from the
// spaced-forest data when needed.
struct PlanarTree {
  std::vector<PlanarTree> children;

  bool operator==(const PlanarTree&) const = default;
  int size() const {
    int s = 1;
    for (const auto& c : children) s += c.size();
    return s;
  }
};

// Spaced-forest encoding of a cup diagram: tree shapes in sector order,
// d0 = position of the leftmost root, d1..d_{k-1} = number of free
// (non-core) positions between consecutive sectors, plus the marked core
// positions and the ambient (m, n).
struct MarkedSpacedForest {
  std::vector<PlanarTree> trees;
  std::vector<Int> gaps;  // gaps[0] = d0; gaps[i] = d_i for i >= 1
  std::set<Int> cross_positions, circle_positions;
  int m = 0, n = 0;

  bool operator==(const MarkedSpacedForest&) const = default;
};

// Brundan-Stroppel matching: repeatedly pair a v at a with the first ^ at
// b > a such that everything strictly between is a core symbol or an
// endpoint of an already-drawn arc.  Any matching order yields the same
// arcs; this implementation works innermost-first.
CupDiagram cup_diagram(const WeightDiagram& d);

// Outermost arcs with their nesting trees, numbered left to right.
std::vector<Sector> sectors(const CupDiagram& c);

MarkedSpacedForest to_spaced_forest(const CupDiagram& c);

// Inverse of to_spaced_forest.
CupDiagram forest_to_cups(const MarkedSpacedForest& f);

// The spaced forest of the dual weight: tree order reversed, each tree
// mirrored, gaps reversed, marks reflected through s -> 1 - r - s.
MarkedSpacedForest forest_mirror(const MarkedSpacedForest& f);

// Diagram-level dual: swap the v/^ labels at the two endpoints of every
// arc, then reflect every symbol through s -> 1 - r - s.
WeightDiagram dual_diagram(const CupDiagram& c);

// True iff nu's arcs superimposed on lambda's labels form an oriented
// diagram: identical cores, no arc endpoint on a core, exactly one
// endpoint of every arc labelled v by lambda, and nesting coherence
// (a cup whose v sits on the right endpoint only nests cups of the
// same kind).
bool is_oriented(const CupDiagram& nu, const WeightDiagram& lambda);

}  // namespace supercup
