// functors.hpp -- the Duflo-Serganova functor on irreducibles, duality,
// translation functors, Pi-shifts, stabilization, ground states and the
// eta_0 reduction to the GL(n|n) principal block.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "supercup/diagrams.hpp"
#include "supercup/weights.hpp"

namespace supercup {

struct SignedSummand {
  SuperWeight weight;
  int parity_shift = 0;      // n_i, a bit
  long long multiplicity = 1;

  bool operator==(const SignedSummand&) const = default;
};

// Return type of every decomposition; weights are pairwise distinct and
// sorted canonically.  dropped_negligible records that summands of
// superdimension zero were discarded.
struct SignedDecomposition {
  std::vector<SignedSummand> summands;
  bool dropped_negligible = true;

  bool operator==(const SignedDecomposition&) const = default;
};

// DS(L(lambda)): one summand per sector of the cup diagram, obtained by
// removing that sector's outer cup along with its v; lives in T_{m-1|n-1},
// same cores, multiplicity free.  Parity shift n_i = parity(w) - parity(w_i)
// mod 2.  Typical input (atypicality 0) yields the empty decomposition:
// typical irreducibles are projective, hence negligible.
SignedDecomposition ds(const SuperWeight& w);

// k-fold iterate of ds, aggregating multiplicities over reconverging paths.
SignedDecomposition ds_power(const SuperWeight& w, int k);

// Path count m(lambda) over all n-step cup-removal sequences from a maximal
// atypical weight, together with the common sign.  Asserts that every path
// lands on the same classical-core weight.
struct DsPaths {
  long long path_count = 0;  // m(lambda)
  int sign = 1;              // (-1)^{parity}
  ClassicalWeight core;
};
DsPaths ds_paths(const SuperWeight& w);

// L(lambda)^vee: swap the v/^ labels in every cup, then reflect every
// symbol through s -> 1 - r - s.  An involution.
SuperWeight dual(const SuperWeight& w);

// Effect of the translation functors F_i / E_i on an irreducible, following
// the case list for the labels at vertices (i, i+1).
struct TranslationOutcome {
  enum class Kind { Irreducible, Zero, NonIrreducible };
  Kind kind = Kind::Zero;
  std::optional<SuperWeight> weight;  // set iff kind == Irreducible

  bool operator==(const TranslationOutcome&) const = default;
};
TranslationOutcome translate_F(Int i, const SuperWeight& w);
TranslationOutcome translate_E(Int i, const SuperWeight& w);

// The unique non-negligible constituent of Pi (x) L(w): cores stay fixed,
// every v moves one step to the next free vertex on its left, processed
// left to right.  Requires maximal atypical w and r = m - n >= 1.
SuperWeight pi_shift(const SuperWeight& w);

// pi_shift without the r >= 1 restriction: for m = n, Pi degenerates to
// Ber^{-1} and the shift is an honest Berezin twist.
SuperWeight pi_shift_any_rank(const SuperWeight& w);

// Inverse move: every v one free vertex to the right, processed right to left.
SuperWeight pi_unshift_any_rank(const SuperWeight& w);

// Smallest N such that pi_shift^N(w) is negatively stable, with that weight.
std::pair<SuperWeight, long long> stabilize(const SuperWeight& w);

// The N-th higher ground state of a maximal atypical block of GL(m|n):
// v's at j-1-N, ..., j-n-N for j = min(crosses) (or j = 1 without crosses).
SuperWeight ground_state(const BlockLabel& b, long long N, int m, int n);

bool is_ground_state(const SuperWeight& w);

// Serganova's block equivalence on stable weights: delete the core symbols,
// compact, and read off a GL(n|n) principal-block weight.
SuperWeight eta0_reduce(const SuperWeight& w);

// w + k * (1,...,1 | -1,...,-1); the diagram translates by k.
SuperWeight berezin_twist(const SuperWeight& w, Int k);

}  // namespace supercup
