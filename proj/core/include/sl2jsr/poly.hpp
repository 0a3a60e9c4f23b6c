#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sl2jsr/scalars.hpp"

namespace sl2jsr {

// Dense univariate polynomial over an exact commutative ring S.
// coeffs()[i] multiplies x^i; trailing zero coefficients are never stored,
// so the zero polynomial has an empty coefficient vector and degree -1.
template <class S>
class Poly {
 public:
  Poly() = default;
  Poly(long c) : cs_{S(c)} { trim(); }
  explicit Poly(const S& c) : cs_{c} { trim(); }
  explicit Poly(std::vector<S> cs) : cs_(std::move(cs)) { trim(); }

  static Poly variable() { return Poly(std::vector<S>{S(0), S(1)}); }

  const std::vector<S>& coeffs() const { return cs_; }
  bool is_zero() const { return cs_.empty(); }
  long degree() const { return static_cast<long>(cs_.size()) - 1; }

  S coeff(std::size_t i) const { return i < cs_.size() ? cs_[i] : S(0); }

  const S& leading() const {
    if (cs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return cs_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> out(std::max(a.cs_.size(), b.cs_.size()), S(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(out));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<S> out(std::max(a.cs_.size(), b.cs_.size()), S(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(out));
  }

  Poly operator-() const {
    std::vector<S> out(cs_.size(), S(0));
    for (std::size_t i = 0; i < cs_.size(); ++i) out[i] = -cs_[i];
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<S> out(a.cs_.size() + b.cs_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.cs_.size(); ++i)
      for (std::size_t j = 0; j < b.cs_.size(); ++j) out[i + j] += a.cs_[i] * b.cs_[j];
    return Poly(std::move(out));
  }

  friend Poly operator*(const S& c, const Poly& a) { return Poly(c) * a; }
  friend Poly operator*(const Poly& a, const S& c) { return Poly(c) * a; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.cs_ == b.cs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Horner evaluation at a point of the coefficient ring.
  S eval(const S& x) const {
    S acc(0);
    for (std::size_t i = cs_.size(); i-- > 0;) acc = acc * x + cs_[i];
    return acc;
  }

  Poly derivative() const {
    if (cs_.size() <= 1) return Poly();
    std::vector<S> out(cs_.size() - 1, S(0));
    for (std::size_t i = 1; i < cs_.size(); ++i) out[i - 1] = cs_[i] * S(static_cast<long>(i));
    return Poly(std::move(out));
  }

  // Human-readable form, highest-degree term first, e.g. "x^3 - 3*x".
  // Relies on to_string(S); a leading '-' in a printed coefficient is taken
  // as its sign, which holds for the integer and rational coefficient types.
  std::string str(const std::string& var = "x") const {
    if (cs_.empty()) return "0";
    std::string out;
    for (std::size_t i = cs_.size(); i-- > 0;) {
      std::string c = to_string(cs_[i]);
      if (c == "0") continue;
      bool neg = !c.empty() && c[0] == '-';
      std::string mag = neg ? c.substr(1) : c;
      if (out.empty()) {
        out += neg ? "-" : "";
      } else {
        out += neg ? " - " : " + ";
      }
      if (i == 0) {
        out += mag;
      } else {
        if (mag != "1") {
          out += mag;
          out += "*";
        }
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    if (out.empty()) out = "0";
    return out;
  }

 private:
  void trim() {
    while (!cs_.empty() && cs_.back() == S(0)) cs_.pop_back();
  }

  std::vector<S> cs_;
};

}  // namespace sl2jsr
