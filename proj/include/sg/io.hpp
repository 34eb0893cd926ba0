#pragma once

#include <iosfwd>
#include <string>

#include "sg/algebra.hpp"

namespace sg {

// Text format, one declaration per line, '#' starts a comment:
//   vertices 1 2 3
//   special 1
//   arrow a 1 2
//   loop e5 5
//   rel a b          # the path ab: apply b, then a
// Special loops are implied by "special" and must not be declared as arrows.
AlgebraInput parse_algebra(std::istream& is);
AlgebraInput parse_algebra_file(const std::string& path);
std::string write_algebra(const AlgebraInput& in);

}  // namespace sg
