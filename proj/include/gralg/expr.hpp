#pragma once

// Integer expressions used by the table fixtures: + - * ^, parentheses, comparisons
// (== != < <= > >=) and named variables such as a, b, m1..m4.

#include "gralg/core.hpp"

#include <map>
#include <string>
#include <string_view>

namespace gralg {

using Bindings = std::map<std::string, Count, std::less<>>;

/// Evaluates `text`; comparisons yield 1 or 0. Throws DomainError on syntax errors,
/// unbound variables or negative exponents.
Count eval_expr(std::string_view text, const Bindings& vars);

}  // namespace gralg
