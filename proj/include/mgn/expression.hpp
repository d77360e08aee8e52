#pragma once

// Text form of divisor classes.
//
//   expr  := '0' | [sign] term (('+' | '-') term)*
//   term  := [(rational | '?') '*'] gen | [rational '*'] named
//   gen   := 'l' | 'd0' | 'w' INT | 'psi' INT | 'd' INT ';' '{' [INT (',' INT)*] '}'
//          | 'd' INT                      (n = 0 only, means d_{INT;{}})
//   named := 'BN(' INT ')' | 'DGA(' INT ';' INT (',' INT)* ')' | 'K(' INT ',' INT ')'
//
// Whitespace is ignored between tokens. psi terms are rewritten in the omega
// basis; '?' marks an Unknown coefficient.

#include <string>
#include <string_view>

#include "mgn/divisor_class.hpp"

namespace mgn {

/// Throws ParseError (with byte offset), InvalidGenerator, SpaceMismatch for
/// a named class on another space, and the class constructors' errors.
DivisorClass parse_class(const SpaceId& space, std::string_view text);

/// Basis order, "c*gen" with c omitted for +-1, "?*gen" for Unknown, "0" for the zero class.
std::string format_class(const DivisorClass& c);

}  // namespace mgn
