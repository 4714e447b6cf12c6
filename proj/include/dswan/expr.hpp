#pragma once

#include <string_view>

#include "dswan/ratfunc.hpp"

namespace dswan {

/// Parses the expression grammar
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ['^' int]          int may be signed or parenthesized
///   atom   := digits | 'pi' | 'u'k | 'b'k | 't' | '(' expr ')'
///
/// Whitespace is ignored. 'b'k is an alias of 'u'k (residue p-basis names).
/// 'pi' requires ctx.uses_pi. Throws ParseError with a byte position.
RatFunc parse_expr(std::string_view text, const Context& ctx);

/// Like parse_expr but insists the result is a Laurent polynomial.
LaurentPoly parse_laurent(std::string_view text, const Context& ctx);

}  // namespace dswan
