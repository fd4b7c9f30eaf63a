#pragma once

#include <string_view>

#include "expr/function_spec.hpp"

namespace blab {

// Parses the function grammar documented in docs/grammar.ebnf. Deterministic;
// throws Error(ErrorCode::Parse) with a 1-based column position on failure.
FunctionSpec parse_function(std::string_view text);

// Parses a stand-alone complex literal such as "0.5", "0.5i" or "0.3+0.4i".
Complex parse_complex(std::string_view text);

}  // namespace blab
