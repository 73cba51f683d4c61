// parse.hpp -- text format for weights: gl(M|N) [a1,...,aM | b1,...,bN]

#pragma once

#include <string>

#include "supercup/weights.hpp"

namespace supercup {

// Whitespace-tolerant; throws ValidationError with the offending position
// on syntax errors and with the offending index on dominance violations.
SuperWeight parse_weight(const std::string& text);

}  // namespace supercup
