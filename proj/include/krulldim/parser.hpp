#pragma once

#include <string_view>

#include "krulldim/expr.hpp"

namespace krulldim {

/// Parses one algebra expression of the DSL, e.g.
///   pullback(T=val(2,1), m=1, D=field(0), outside=0)
/// Whitespace between tokens is ignored. Every node is validated as soon as
/// it is built, so a ConstraintError carries the span of the offending node.
/// Throws SyntaxError (with the column and the expected tokens) otherwise.
AlgebraExpr parse_expr(std::string_view text);

}  // namespace krulldim
