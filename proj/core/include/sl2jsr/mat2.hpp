#pragma once

#include <stdexcept>
#include <string>

#include "sl2jsr/quadext.hpp"
#include "sl2jsr/scalars.hpp"
#include "sl2jsr/word.hpp"

namespace sl2jsr {

// Row-major 2x2 matrix [[a, b], [c, d]] over an exact scalar ring S.
template <class S>
struct Mat2 {
  S a{0}, b{0}, c{0}, d{0};

  Mat2() = default;
  Mat2(S a_, S b_, S c_, S d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Mat2 identity() { return Mat2(S(1), S(0), S(0), S(1)); }

  S det() const { return a * d - b * c; }
  S tr() const { return a + d; }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return Mat2(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
  }

  Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }

  friend bool operator==(const Mat2& m, const Mat2& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
  friend bool operator!=(const Mat2& m, const Mat2& n) { return !(m == n); }

  // Adjugate-based inverse, valid only for det = +-1.
  Mat2 inverse() const {
    S dt = det();
    Mat2 adj(d, -b, -c, a);
    if (dt == S(1)) return adj;
    if (dt == S(-1)) return -adj;
    throw std::domain_error("matrix inverse requires determinant +-1");
  }

  Mat2 pow(unsigned long k) const {
    Mat2 acc = identity();
    Mat2 base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }
};

// Returns M or -M, whichever has nonnegative trace.
template <class S>
Mat2<S> normalize_sign(const Mat2<S>& m) {
  if (sign_of(m.tr()) < 0) return -m;
  return m;
}

// Evaluates a group word left to right: a -> A, b -> B, A -> A^-1, B -> B^-1.
// Φ(wu) = Φ(w)Φ(u); the empty word gives the identity.
template <class S>
Mat2<S> word_eval(const std::string& w, const Mat2<S>& A, const Mat2<S>& B) {
  if (!w.empty()) require_group_word(w);
  bool need_inv = w.find_first_of("AB") != std::string::npos;
  Mat2<S> Ai, Bi;
  if (need_inv) {
    Ai = A.inverse();
    Bi = B.inverse();
  }
  Mat2<S> acc = Mat2<S>::identity();
  for (char ch : w) {
    switch (ch) {
      case 'a': acc = acc * A; break;
      case 'b': acc = acc * B; break;
      case 'A': acc = acc * Ai; break;
      case 'B': acc = acc * Bi; break;
      default: break;
    }
  }
  return acc;
}

template <class S>
std::string mat2_str(const Mat2<S>& m) {
  return "[[" + to_string(m.a) + "," + to_string(m.b) + "],[" + to_string(m.c) + "," +
         to_string(m.d) + "]]";
}

// Parses "[[a,b],[c,d]]" with entries accepted by the quadratic-scalar parser.
Mat2<QuadExt> parse_mat2(const std::string& text);

inline Mat2<Int> to_int_mat(const Mat2<QuadExt>& m) {
  return Mat2<Int>(m.a.int_value(), m.b.int_value(), m.c.int_value(), m.d.int_value());
}

inline Mat2<QuadExt> to_quadext_mat(const Mat2<Int>& m) {
  return Mat2<QuadExt>(QuadExt(m.a), QuadExt(m.b), QuadExt(m.c), QuadExt(m.d));
}

inline bool all_int_entries(const Mat2<QuadExt>& m) {
  return m.a.is_int() && m.b.is_int() && m.c.is_int() && m.d.is_int();
}

}  // namespace sl2jsr
