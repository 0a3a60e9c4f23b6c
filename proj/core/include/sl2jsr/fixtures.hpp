#pragma once

#include <string>
#include <vector>

#include "sl2jsr/mat2.hpp"
#include "sl2jsr/quadext.hpp"

namespace sl2jsr {

// Named example matrices used across tests and the command line:
//   C = [[9,8],[1,1]]                hyperbolic, trace 10
//   D = [[5,-1],[1,0]]               hyperbolic, trace 5
//   E = [[17-2√6,-12+2√6],[-3-2√6,8+2√6]]/10   hyperbolic, trace 5/2
//   G = [[5,-4],[4,-3]]              parabolic fixing 1
//   L = [[1,0],[1,1]]                parabolic fixing 0
//   N = [[1,1],[0,1]]                parabolic fixing ∞
// Throws ParseError for any other name.
Mat2<QuadExt> named_fixture(const std::string& name);

const std::vector<std::string>& fixture_names();

// The integer matrices L and N.
Mat2<Int> lower_unit();
Mat2<Int> upper_unit();

// Evaluates a group word with a -> L and b -> N.
Mat2<Int> ln_word(const std::string& w);

}  // namespace sl2jsr
