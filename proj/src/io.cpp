#include "reeslab/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "reeslab/errors.hpp"

namespace reeslab {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

std::array<Point, 3> parse_triangle_text(const std::string& text) {
  std::array<std::optional<Point>, 3> v;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": expected key = x, y");
    const std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key.size() != 2 || key[0] != 'v' || key[1] < '1' || key[1] > '3')
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    const auto comma = value.find(',');
    if (comma == std::string::npos || value.find(',', comma + 1) != std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected two coordinates");
    auto& slot = v[key[1] - '1'];
    if (slot) throw ParseError("line " + std::to_string(line_no) + ": duplicate key " + key);
    slot = Point{parse_rat(value.substr(0, comma)), parse_rat(value.substr(comma + 1))};
  }
  std::array<Point, 3> out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i]) throw ParseError("missing key v" + std::to_string(i + 1));
    out[i] = *v[i];
  }
  return out;
}

std::array<Point, 3> read_triangle_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_triangle_text(ss.str());
}

std::string format_triangle_text(const std::array<Point, 3>& vertices) {
  std::string out;
  for (int i = 0; i < 3; ++i)
    out += "v" + std::to_string(i + 1) + " = " + to_string(vertices[i].x) + ", " + to_string(vertices[i].y) + "\n";
  return out;
}

}  // namespace reeslab
