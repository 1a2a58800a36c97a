#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "fpt/poly.hpp"

namespace fpt {

/// Exponent pair (deg_y, deg_z) -> nonzero coefficient in F_p[t].
using MonomialMap = std::map<std::pair<std::uint64_t, std::uint64_t>, Poly>;

/// Parse a sum of products of factors INT, t^k, y^k, z^k and parenthesised
/// subexpressions. `variables` lists which of 'y' and 'z' may appear.
/// Juxtaposition multiplies, so "(t+1)y^2" and "(t+1)*y^2" are the same.
MonomialMap parse_monomials(std::uint32_t p, std::string_view text, std::string_view variables);

/// Constant coefficient printed as a signed symmetric representative ("-2"), otherwise
/// the canonical poly form; wrapped in parentheses when it has more than one term.
std::string coefficient_text(const Poly& c, bool standalone);

}  // namespace fpt
