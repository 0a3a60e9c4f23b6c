#include "sl2jsr/mat2.hpp"

#include <array>

namespace sl2jsr {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch != ' ' && ch != '\t' && ch != '\r' && ch != '\n') out += ch;
  }
  return out;
}

}  // namespace

Mat2<QuadExt> parse_mat2(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.size() < 8 || s.compare(0, 2, "[[") != 0 || s.compare(s.size() - 2, 2, "]]") != 0) {
    throw ParseError("matrix must look like [[a,b],[c,d]]: '" + text + "'");
  }
  std::string body = s.substr(2, s.size() - 4);
  std::size_t sep = body.find("],[");
  if (sep == std::string::npos) {
    throw ParseError("matrix must have two rows: '" + text + "'");
  }
  std::array<std::string, 2> rows = {body.substr(0, sep), body.substr(sep + 3)};
  std::array<QuadExt, 4> e;
  for (int i = 0; i < 2; ++i) {
    // scalar text never contains a comma, so a plain split is safe
    std::size_t comma = rows[i].find(',');
    if (comma == std::string::npos || rows[i].find(',', comma + 1) != std::string::npos) {
      throw ParseError("matrix row must have two entries: '" + text + "'");
    }
    e[2 * i] = QuadExt::parse(rows[i].substr(0, comma));
    e[2 * i + 1] = QuadExt::parse(rows[i].substr(comma + 1));
  }
  return Mat2<QuadExt>(e[0], e[1], e[2], e[3]);
}

}  // namespace sl2jsr
