#include "sl2jsr/fixtures.hpp"

#include "sl2jsr/word.hpp"

namespace sl2jsr {

namespace {

Mat2<QuadExt> int_entries(long a, long b, long c, long d) {
  return {QuadExt(a), QuadExt(b), QuadExt(c), QuadExt(d)};
}

}  // namespace

Mat2<QuadExt> named_fixture(const std::string& name) {
  if (name == "C") return int_entries(9, 8, 1, 1);
  if (name == "D") return int_entries(5, -1, 1, 0);
  if (name == "E") {
    return {QuadExt(Int(17), Int(-2), Int(10), Int(6)),
            QuadExt(Int(-12), Int(2), Int(10), Int(6)),
            QuadExt(Int(-3), Int(-2), Int(10), Int(6)),
            QuadExt(Int(8), Int(2), Int(10), Int(6))};
  }
  if (name == "G") return int_entries(5, -4, 4, -3);
  if (name == "L") return int_entries(1, 0, 1, 1);
  if (name == "N") return int_entries(1, 1, 0, 1);
  throw ParseError("unknown fixture name: " + name);
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"C", "D", "E", "G", "L", "N"};
  return names;
}

Mat2<Int> lower_unit() { return {Int(1), Int(0), Int(1), Int(1)}; }

Mat2<Int> upper_unit() { return {Int(1), Int(1), Int(0), Int(1)}; }

Mat2<Int> ln_word(const std::string& w) {
  return word_eval(w, lower_unit(), upper_unit());
}

}  // namespace sl2jsr
