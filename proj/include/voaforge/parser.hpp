#pragma once

#include "voaforge/fock.hpp"
#include "voaforge/report.hpp"

#include <string>

namespace voaforge {

/** Syntax error with a 1-based position and the offending token. */
struct ParseError : MathError {
    ParseError(const std::string& msg, int line, int column, std::string token);
    int line;
    int column;
    std::string token;
};

/**
 * Parses
 *   state  := term (('+'|'-') term)*
 *   term   := rat? factor*
 *   factor := gen '[' int ']' | 'e^{' vector '}' | '(' state ')' | 'T' '(' state ')'
 *   vector := signed rational combination of generator names, or 0.
 * Factors act right to left on the vacuum: gen[n] is the Heisenberg mode, the others
 * act through the (-1)-product.
 */
FockState parse_expr(const std::string& input, SpacePtr space, bool requireLattice = false);

/** Parses a vector such as "u+v" or "-1/2*A" in the given space. */
RatVec parse_vector(const std::string& input, const SpacePtr& space);

/** Canonical text; parse_expr inverts it. */
std::string print_state(const FockState& s);

/** {"space": ..., "terms": [{"coeff": "n/d", "momentum": [...], "modes": [[gen, n], ...]}]} */
json state_json(const FockState& s);

} // namespace voaforge
