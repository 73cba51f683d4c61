// kac.hpp -- composition factors of Kac modules via oriented cup diagrams,
// and the restriction bijection used as a cross-check.

#pragma once

#include <utility>
#include <vector>

#include "supercup/diagrams.hpp"
#include "supercup/weights.hpp"

namespace supercup {

// In the Grothendieck group V(lambda) = sum of L(nu) over all nu whose
// unlabelled cup diagram superimposed on lambda's weight diagram is
// oriented.  Every factor occurs with multiplicity one, and lambda itself
// is always among them.  window_scale widens the candidate window (the
// window-doubling robustness test passes 2).
std::vector<SuperWeight> kac_composition_factors(const SuperWeight& lambda,
                                                 int window_scale = 1);

// For maximal atypical lambda = (lambda_1, mu | -mu, -lambda_1) of GL(n|n):
// the factors of the reduced Kac module V(mu | -mu, -lambda_1) in GL(n-1|n)
// correspond 1:1 to the factors of V(lambda) with first entry lambda_1,
// via prepending lambda_1.  Returns the paired lists; a failed pairing
// raises InternalInconsistency.
struct KacBijectionReport {
  SuperWeight reduced;  // the GL(n-1|n) highest weight
  std::vector<std::pair<SuperWeight, SuperWeight>> pairs;  // (reduced factor, full factor)
  size_t full_factor_count = 0;  // all factors of V(lambda)
};
KacBijectionReport kac_restriction_bijection(const SuperWeight& lambda);

}  // namespace supercup
