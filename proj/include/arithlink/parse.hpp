#ifndef ARITHLINK_PARSE_HPP_
#define ARITHLINK_PARSE_HPP_

/* Text forms of field elements and ideals.
 *
 *   expr   := ['-'] term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ('^' ['-'] integer)?
 *   atom   := integer | 'z' | '(' expr ')'
 *
 *   ideal  := '1' | item ('*' item)*
 *   item   := ( '(' expr ')' | 'P(' p ',' '[' g0, g1, ... ']' ')' ) ('^' ['-'] integer)?
 *
 * z is zeta_m, whitespace is ignored and U+2212 is accepted as minus.
 * Errors carry 1-based columns. */

#include <string>

#include "arithlink/cyclotomic.hpp"
#include "arithlink/ideals.hpp"

namespace arithlink {

CycloElement parse_element(std::string const& text, CycloField const& F);

/* principal items are factored; they must have no support over primes
 * dividing m */
FactoredIdeal parse_ideal(std::string const& text, CycloField const& F, std::uint64_t seed = 0);

} // namespace arithlink

#endif /* ARITHLINK_PARSE_HPP_ */
