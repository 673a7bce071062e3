#pragma once

#include <cstddef>
#include <string_view>

#include "weylkit/charring.hpp"
#include "weylkit/hecke.hpp"

namespace weylkit {

/// Parses a character expression such as `2*e[1,0] - e[-1,2]^2`.
///
///   expr    := [+|-] term { (+|-) term }
///   term    := factor { * factor }
///   factor  := primary [ ^ [-] integer ]
///   primary := integer | e[ integer {, integer} ] | ( expr )
///
/// Weights are fundamental-weight coordinates. `e[0]` denotes the unit in
/// any rank. With rank 0 the rank is taken from the first monomial.
/// Errors are ParseError with the byte offset of the failure.
CharElt parse_char(std::string_view text, std::size_t rank = 0);

/// Parses an operator expression: a signed sum of `*`-products of d[j],
/// dp[j], w[j], top, m[<character>] and integer scalars, with 1-based j.
/// Composition is left to right as written, e.g. `d[1]*d[2]*d[1]`.
OpExpr parse_operator(std::string_view text, std::size_t rank);

/// "1,0", "[1,0]" or "2"
Weight parse_weight(std::string_view text, std::size_t rank = 0);

}  // namespace weylkit
