#pragma once

#include <string>
#include <string_view>

#include "gqc4/poly2.hpp"
#include "gqc4/poly4.hpp"

namespace gqc4 {

// Shared text format. Term form, e.g. "x^3+2x^2+x+3", "x-1", "3*x^2", "-1";
// coefficient-list form, ascending degree, e.g. "[1,1,0,1]". Coefficients are
// read mod 4 (Z4) or mod 2 (Z2, where only 0/1 are accepted). Throws ParseError.

QuadPoly parse_quad(std::string_view text);
BinPoly parse_bin(std::string_view text);

/// "[c0,c1,...]" ascending; "[]" for zero.
std::string coeff_list(const QuadPoly& f);
std::string coeff_list(const BinPoly& f);

}  // namespace gqc4
