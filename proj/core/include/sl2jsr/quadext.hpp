#pragma once

#include <optional>
#include <string>

#include "sl2jsr/scalars.hpp"

namespace sl2jsr {

// Real quadratic irrational (p + q*sqrt(D)) / r.
// Invariants: r > 0; gcd(p, q, r) = 1; D >= 1; q == 0 forces D = 1; D carries
// no square factor the normalizer can find. The ordering is the order of the
// real values and is decided exactly, also between values over different D.
class QuadExt {
 public:
  QuadExt() : p_(0), q_(0), r_(1), d_(1) {}
  QuadExt(long v) : p_(v), q_(0), r_(1), d_(1) {}
  QuadExt(const Int& v) : p_(v), q_(0), r_(1), d_(1) {}
  QuadExt(const Rat& v) : p_(v.get_num()), q_(0), r_(v.get_den()), d_(1) {}
  QuadExt(const Int& p, const Int& q, const Int& r, const Int& d);

  // sqrt(d) for d >= 0.
  static QuadExt sqrt_of(const Int& d);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& r() const { return r_; }
  const Int& d() const { return d_; }

  bool is_rational() const { return sign_of(q_) == 0; }
  bool is_int() const { return is_rational() && r_ == 1; }
  Rat rational_value() const;  // requires is_rational()
  Int int_value() const;       // requires is_int()

  int sign() const;
  bool is_zero() const { return sign_of(p_) == 0 && sign_of(q_) == 0; }

  // Galois conjugate q -> -q.
  QuadExt conjugate() const;
  // Field norm (value times conjugate), always rational.
  Rat norm() const;

  // sqrt of *this if it lies in a representable quadratic field
  // (the same field, or a quadratic field over the rationals).
  std::optional<QuadExt> sqrt_in_field() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  // -1 / 0 / +1; exact, cross-field.
  int compare(const QuadExt& o) const;

  friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.compare(b) == 0; }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return a.compare(b) != 0; }
  friend bool operator<(const QuadExt& a, const QuadExt& b) { return a.compare(b) < 0; }
  friend bool operator<=(const QuadExt& a, const QuadExt& b) { return a.compare(b) <= 0; }
  friend bool operator>(const QuadExt& a, const QuadExt& b) { return a.compare(b) > 0; }
  friend bool operator>=(const QuadExt& a, const QuadExt& b) { return a.compare(b) >= 0; }

  // "p", "p/r", or "(p+q*sqrt(D))/r".
  std::string str() const;
  // Accepts the three forms emitted by str(), plus "q*sqrt(D)" and "sqrt(D)".
  static QuadExt parse(const std::string& text);

  // Display-quality double; never used in any exact decision.
  double approx() const;

  // Sign of A + B*sqrt(m) + C*sqrt(n), exact; m, n >= 0.
  static int sign_linear(const Int& A, const Int& B, const Int& m,
                         const Int& C, const Int& n);

 private:
  struct Trusted {};
  QuadExt(Trusted, Int p, Int q, Int r, Int d);

  // gcd/sign normalization; assumes d_ already canonical for this field.
  void reduce();
  // Returns the common field discriminant, or throws on a true mixture.
  static const Int& common_d(const QuadExt& a, const QuadExt& b);

  Int p_, q_, r_, d_;
};

std::string to_string(const QuadExt& v);

inline int sign_of(const QuadExt& v) { return v.sign(); }

}  // namespace sl2jsr
