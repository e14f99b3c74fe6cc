#pragma once

#include <string>
#include <string_view>

#include "uqfi/linalg.hpp"

namespace uqfi {

/// Decimal radians ("0.785") or a rational multiple of pi ("pi", "pi/4",
/// "3pi/2", "-2*pi/3", "0.5pi"). Throws DomainError on malformed text.
double parse_angle(std::string_view text);

/// "re+imi", "re-imi", "re", "imi", "i", "-i".
cplx parse_complex(std::string_view text);

/// Shortest form that re-parses to the same double ("%.17g").
std::string format_double(double v);

}  // namespace uqfi
