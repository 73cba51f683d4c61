// weights.hpp -- dominant weights of GL(m|n), their weight diagrams,
// atypicality, parity, block labels and classical cores.
//
// A weight diagram labels the integer line by the symbols v ^ x o.  It is
// stored sparsely: three finite integer sets, with ^ the implicit default
// label everywhere else.  All values are immutable after construction and
// every operation is a pure function.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "supercup/classical.hpp"
#include "supercup/errors.hpp"

namespace supercup {

// Dominant integral highest weight of GL(m|n).  m = 0 or n = 0 is allowed
// (purely even/odd general linear groups show up as DS endpoints and in the
// Kac restriction map).
struct SuperWeight {
  int m = 0, n = 0;
  std::vector<Int> top;     // lambda_1 >= ... >= lambda_m
  std::vector<Int> bottom;  // lambda_{m+1} >= ... >= lambda_{m+n}

  SuperWeight() = default;
  SuperWeight(int m, int n, std::vector<Int> top, std::vector<Int> bottom);

  bool operator==(const SuperWeight&) const = default;
  std::string to_string() const;  // "gl(4|2) [0,0,0,-5 | 5,0]"
};

// Canonical order used to sort decompositions deterministically.
bool operator<(const SuperWeight& a, const SuperWeight& b);

enum class Symbol { Wedge, Vee, Cross, Circle };

struct WeightDiagram {
  std::set<Int> vees, crosses, circles;
  int m = 0, n = 0;  // provenance: which GL(m|n) the diagram lives in

  WeightDiagram() = default;
  WeightDiagram(std::set<Int> vees, std::set<Int> crosses, std::set<Int> circles, int m, int n);

  Symbol label(Int pos) const;
  bool is_core(Int pos) const { return crosses.count(pos) || circles.count(pos); }
  std::set<Int> cores() const;

  bool operator==(const WeightDiagram&) const = default;
  std::string key() const;  // canonical string, usable as a memo key
};

// The block of an irreducible is determined by the cross and circle positions.
struct BlockLabel {
  std::set<Int> crosses, circles;
  bool operator==(const BlockLabel&) const = default;
};

// lambda  |->  its weight diagram, via the index sets
//   I_x = {lambda_1, lambda_2 - 1, ..., lambda_m - m + 1}
//   I_o = {1 - m - lambda_{m+1}, ..., n - m - lambda_{m+n}}.
WeightDiagram weight_to_diagram(const SuperWeight& w);

// Inverse of weight_to_diagram, by sorted reconstruction of I_x and I_o.
SuperWeight diagram_to_weight(const WeightDiagram& d);

// Number of v's in the diagram; between 0 and n.
int atypicality(const SuperWeight& w);
int atypicality(const WeightDiagram& d);

bool is_maximal_atypical(const SuperWeight& w);

// Parity bit of L(lambda).  For maximal atypical weights this is
// sum(lambda_{m+i}) mod 2; for atypicality k < n it is the parity of the
// corresponding gl(k|k) principal-block weight (core removal + compaction).
int parity(const SuperWeight& w);

BlockLabel block_label(const SuperWeight& w);
BlockLabel block_label(const WeightDiagram& d);

// Inverts the I_x formula on the crosses alone: for cross positions
// c_1 > ... > c_r this is the dominant GL(r) weight (c_1, c_2+1, ..., c_r+r-1).
// Requires a maximal atypical block: exactly r crosses, no circles.
ClassicalWeight classical_core_weight(const BlockLabel& b, int r);

// Stability: all v's strictly left of all core symbols (vacuous without
// cores).  Negatively stable additionally requires mu_1 <= 0, i.e.
// max(vees) <= -(m-n).  Both require a maximal atypical weight.
bool is_stable(const SuperWeight& w);
bool is_negatively_stable(const SuperWeight& w);

// Core removal with compaction: every non-core symbol moves right by the
// number of core symbols to its right.  The k v's of an atypicality-k
// diagram become a gl(k|k) principal-block diagram.  Pinned by
// eta(L(0,...,0,mu|-mu)) = L(mu|-mu) and eta(Pi) = Ber^{-1}.
std::set<Int> compacted_vees(const WeightDiagram& d);

}  // namespace supercup
