#pragma once

#include <string>
#include <string_view>

#include "qsuper/freealg.hpp"

namespace qsuper {

/// Symbols visible to the parser. `alphabet` may be null for scalar-only input.
struct ParseContext {
  ParameterSet params;
  AlphabetPtr alphabet;
};

/// Grammar: sums and differences of terms; a term is a product of factors
/// joined by `*` (or `/` with a generator-free divisor); a factor is an
/// integer, `i`, a parameter, a generator, a parenthesized expression, or a
/// factor raised to a positive integer with `^`.
Element parse_expression(std::string_view src, const ParseContext& ctx);

/// Parses generator-free input.
Scalar parse_scalar(std::string_view src, const ParameterSet& params);

/// Parity names used by the CLI: "even"/"odd" or 0/1.
int parse_parity(std::string_view s);

}  // namespace qsuper
