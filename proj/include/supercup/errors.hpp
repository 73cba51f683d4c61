// errors.hpp -- exception types shared across the engine.

#pragma once

#include <stdexcept>
#include <string>

namespace supercup {

// Bad input: malformed weight strings, dominance violations, operations
// applied outside their domain (wrong atypicality, wrong rank, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested principal-part fusion is not covered by the built-in
// label tables; the caller has to supply external fusion data.
struct ExternalFusionRequired : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal self-check failed (path divergence, oracle disagreement).
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace supercup
