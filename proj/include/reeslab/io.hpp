#pragma once
#include <array>
#include <string>

#include "reeslab/geometry.hpp"

namespace reeslab {

// Key-value triangle text: lines "v1 = -5/6, 5/12" for v1, v2, v3.
// '#' starts a comment; whitespace is ignored.
std::array<Point, 3> parse_triangle_text(const std::string& text);
std::array<Point, 3> read_triangle_file(const std::string& path);
std::string format_triangle_text(const std::array<Point, 3>& vertices);

}  // namespace reeslab
