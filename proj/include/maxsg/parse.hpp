#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "maxsg/mapexpr.hpp"

namespace maxsg {

/// Expression syntax:
///   affine(N,p,s,[t0,...])  cantor_proj  compose(e1,e2)
///   id  shift(k)  times(k)  divfloor(k)  perm([i0,...])
/// Throws ParseError (with position) on bad syntax and Error(ArityError) on
/// malformed tables.
MapExpr parse_expr(std::string_view text);

/// "0,1,5" -> {0,1,5}. Throws ParseError.
std::vector<std::uint64_t> parse_naturals(std::string_view text);

}  // namespace maxsg
