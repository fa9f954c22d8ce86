#pragma once

#include <string_view>

#include "smeared/polynomial.hpp"

namespace smeared {

/// Parses an ASCII polynomial expression over `ring`:
///
///   expr   := ['-'|'+'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | var | '(' expr ')'
///
/// Rational literals are "p" or "p/q". Whitespace is ignored. Juxtaposition such as
/// "2x" is rejected. Throws ParseError with the byte offset of the offending token.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace smeared
