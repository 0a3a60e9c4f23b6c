#pragma once

#include <functional>
#include <string>
#include <utility>

#include "sl2jsr/poly.hpp"
#include "sl2jsr/quadext.hpp"
#include "sl2jsr/scalars.hpp"

namespace sl2jsr {

// Closed interval with exact rational endpoints, lo <= hi.
struct RatInterval {
  Rat lo;
  Rat hi;

  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
};

RatInterval iv_point(const Rat& v);
RatInterval iv_add(const RatInterval& a, const RatInterval& b);
RatInterval iv_sub(const RatInterval& a, const RatInterval& b);
RatInterval iv_mul(const RatInterval& a, const RatInterval& b);
RatInterval iv_neg(const RatInterval& a);

// Enclosure of sqrt(v) for v >= 0 with width at most 2^-bits * (1/denominator scale).
RatInterval sqrt_bounds(const Rat& v, unsigned long bits);

// Enclosure of v^(1/n) for v >= 0, n >= 1.
RatInterval nthroot_bounds(const Rat& v, unsigned long n, unsigned long bits);

// Monotone envelopes: enclose sqrt / n-th root of every point of `a` (a.lo >= 0).
RatInterval iv_sqrt(const RatInterval& a, unsigned long bits);
RatInterval iv_nthroot(const RatInterval& a, unsigned long n, unsigned long bits);

// Enclosure of a quadratic-extension value; exact point when the value is rational.
RatInterval quadext_bounds(const QuadExt& v, unsigned long bits);

// Decimal expansion of v truncated toward zero to `digits` fractional digits.
std::string decimal_truncate_exact(const Rat& v, unsigned digits);

// Same, for a value known only through shrinking rational enclosures.
// `approx(bits)` must return an interval containing the value, with width
// decreasing toward zero as bits grows. Intended for irrational values, where
// the truncation point is never hit exactly and refinement terminates.
std::string decimal_truncate(const std::function<RatInterval(unsigned long)>& approx,
                             unsigned digits);

// Bisection root isolation for p on [lo, hi] with a sign change between the
// endpoints. Returns an interval of width at most `width` whose endpoints have
// opposite signs, except that a zero value found exactly at an endpoint or
// midpoint is reported as an exact root {x, x}. Throws std::invalid_argument
// if lo >= hi, width <= 0, or the endpoint signs are equal (and nonzero).
std::pair<Rat, Rat> isolate_root(const Poly<Rat>& p, const Rat& lo, const Rat& hi,
                                 const Rat& width);

// Horner evaluation of a rational polynomial at a quadratic-extension point.
QuadExt eval_at(const Poly<Rat>& p, const QuadExt& x);

}  // namespace sl2jsr
