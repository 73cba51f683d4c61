// fusion.hpp -- splicing into classical x principal parts, semisimplified
// images, superdimensions, blockwise and full tensor decomposition modulo
// negligible summands, and determinants.

#pragma once

#include <optional>
#include <variant>

#include "supercup/classical.hpp"
#include "supercup/functors.hpp"

namespace supercup {

// Factorization of a maximal atypical weight: after N left shifts the
// weight is negatively stable of the form (lambda_1..lambda_r, mu | -mu);
// classical keeps the GL(r) part, principal the GL(n|n) part [mu].
struct SplitWeight {
  ClassicalWeight classical;
  SuperWeight principal;  // (mu | -mu) in the GL(n|n) principal block
  long long pi_power = 0; // N

  bool operator==(const SplitWeight&) const = default;
};

// Image in the semisimplification, as a representation of GL(r) x H_{n|n}:
// X-bar = L(classical) boxtimes X-bar_{principal}.  principal already
// absorbs the Ber_{n|n}^N coming from undoing the N Pi-shifts;
// ber_core_power records that N.
struct SemisimpleImage {
  ClassicalWeight classical;
  SuperWeight principal;
  int parity = 0;
  long long ber_core_power = 0;
  bool zero = false;  // designated image of a negligible input

  bool operator==(const SemisimpleImage&) const = default;
};

struct FusionSummand {
  ClassicalWeight classical;  // names the block
  // full-level payload: a concrete weight (ground-state route) or a
  // group-fusion label (spec-driven route); monostate at block level
  std::variant<std::monostate, SuperWeight, GroupRepLabel> principal;
  long long multiplicity = 1;

  bool operator==(const FusionSummand&) const = default;
};

struct FusionResult {
  enum class Level { Blockwise, Full };
  Level level = Level::Blockwise;
  std::vector<FusionSummand> summands;  // sorted canonically
  bool negligible_dropped = true;
  std::string warning;  // e.g. SL pass-through caveat

  long long total_multiplicity() const;
};

// Thrown when the principal fusion is not covered; carries the blockwise
// decomposition as partial output.
struct FusionNeedsExternalTable : ExternalFusionRequired {
  FusionResult blockwise;
  FusionNeedsExternalTable(const std::string& what, FusionResult partial)
      : ExternalFusionRequired(what), blockwise(std::move(partial)) {}
};

// sdim L(lambda) = 0 iff the atypicality is not maximal.
bool is_negligible_irreducible(const SuperWeight& w);

SplitWeight splice(const SuperWeight& w);

SemisimpleImage image(const SuperWeight& w);

// Signed superdimension: sign * m(lambda) * dim L(lambda_cl).
BigInt sdim(const SuperWeight& w);

// Littlewood-Richardson product of the classical cores; each entry names a
// maximal atypical block together with its multiplicity.
FusionResult tensor_blockwise(const SuperWeight& w1, const SuperWeight& w2);

// Full decomposition for (higher) ground states: normalize through Pi and
// Berezin twists to covariant representations, multiply by LR, keep the
// maximal atypical summands (nu_{r+1} = 0), and re-apply the twists.
FusionResult tensor_ground_states(const SuperWeight& w1, const SuperWeight& w2);

// Full decomposition modulo negligibles, with the principal fusion driven
// by caller-supplied classification data.  Identical specs mean a common
// group H_mu and use the built-in label tables; different groups make the
// external product indecomposable, so the block structure decides.
FusionResult tensor_mod_negligible(const SuperWeight& w1, const SuperWeight& w2,
                                   const PrincipalFusionSpec& spec1,
                                   const PrincipalFusionSpec& spec2);

// det(X_lambda) = det(L(chi))^{m(lambda)} boxtimes det(X-bar_mu)^{dim L(chi)}.
// The classical factor resolves to a determinant power; the principal
// factor resolves to a Berezin power only when X-bar_mu is one-dimensional,
// and otherwise stays symbolic in the opaque exponent l(mu).
struct DeterminantExpr {
  BigInt classical_det_power = 0;
  bool principal_resolved = false;
  BigInt principal_ber_power = 0;   // valid when resolved
  BigInt principal_multiplier = 1;  // dim L(chi), multiplies l(mu) when symbolic
  SuperWeight principal_weight;     // the [mu] the symbol refers to

  std::string to_string() const;
};
DeterminantExpr determinant(const SuperWeight& w);

}  // namespace supercup
