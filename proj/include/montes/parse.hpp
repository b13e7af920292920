#pragma once

#include <string>

#include "montes/arith.hpp"

namespace montes {

// "x^4+5*x^2+25" or "[25,0,5,0,1]" (ascending coefficients).
IntPoly parse_poly(const std::string& text);

}  // namespace montes
