#pragma once

#include <string>

#include "sl2jsr/characters.hpp"
#include "sl2jsr/poly.hpp"
#include "sl2jsr/scalars.hpp"

namespace sl2jsr {

using RatPoly = Poly<Rat>;

// Rational-trace probes showing that the dominance patterns behind the IV_*
// classifier labels are specific to integer traces. The trace of a is frozen
// at a rational x_a, the trace of b is the indeterminate x, and the trace of
// ab is pinned to x^2 - 2 + delta, so the offset delta = [ab] - [b^2] stays
// constant while x varies. Every word trace then becomes a polynomial in x
// with rational coefficients, and dominance questions become exact sign
// questions about those polynomials.
struct TripleContext {
  Rat x_a;    // trace of a
  Rat delta;  // trace of ab minus trace of b^2
};

// Trace of the group word w (letters a, b, A, B) as a polynomial in
// x = trace of b. The empty word gives the constant 2.
RatPoly trace_poly(const std::string& w, const TripleContext& ctx);

// Data for the configuration (x_a, delta) = (101/50, -1/50), where [ab] sits
// just below [b^2]. With integer traces that inequality makes the single
// letter b optimal, but here the equal-length comparison [ab^2] - [b^3]
// simplifies to (49x - 101)/50, which is positive for x > 101/49: the mixed
// word outgrows the pure power.
struct Iv1Report {
  TripleContext ctx;
  RatPoly difference;  // [ab^2] - [b^3] = (49x - 101)/50
  Rat witness;         // x = 11/5
  Rat value;           // difference at the witness: 17/125 > 0
  Rat trace_abb;       // [ab^2] at the witness: 523/125
  Rat trace_bbb;       // [b^3] at the witness: 506/125
  Ordering verdict;    // per-letter growth of ab^2 versus b: Greater
};

// Recomputes the difference polynomial from scratch, checks it against its
// pinned coefficients, and verifies the sign claims and the growth verdict
// at the witness. Throws InconsistencyError if any of them fails.
Iv1Report iv1_counterexample();

// Data for the configuration (x_a, delta) = (101/50, 0), where [ab] = [b^2].
// With integer traces that equality makes ab^2 optimal, but here the
// difference [(ab^2)^4] - [(ab^3)^3] of two length-12 products is a degree-10
// polynomial that is negative at x = 21/10, so ab^3 outgrows ab^2 per letter.
struct Iv2Report {
  TripleContext ctx;
  RatPoly difference;  // [(ab^2)^4] - [(ab^3)^3], degree 10
  Rat witness;         // x = 21/10
  Rat value;           // difference at the witness, negative
};

// Recomputes the degree-10 difference, checks all 11 coefficients against
// their pinned exact values, and verifies the negative sign at the witness.
// Throws InconsistencyError on any mismatch.
Iv2Report iv2_counterexample();

// Constant-sign certificate for a polynomial q on a short interval [lo, hi]
// inside [0, 21/10]: slope_bound dominates |q'| on [0, 21/10], so q can move
// by at most slope_bound * (hi - lo) across the interval; when both endpoint
// values stay below zero by more than that climb, q is negative on every
// point of the interval.
struct SignCertificate {
  Rat at_lo;        // exact value at the left endpoint
  Rat at_hi;        // exact value at the right endpoint
  Rat slope_bound;  // sum over i >= 1 of i * |coeff_i| * (21/10)^(i-1)
  bool negative;    // certified: q < 0 on all of [lo, hi]
};

// Data for the configuration (x_a, delta) = (101/50, 1/50). The equal-length
// comparison [(ab)^3] - [(ab^2)^2] collapses to a degree-4 polynomial with a
// root x0 in [2, 21/10]: at x0 the words ab and ab^2 tie per letter. Both
// lose to their concatenation there: [(ab)^5] - [(abab^2)^2] (degree 8) and
// [(ab^2)^5] - [(abab^2)^3] (degree 13) are certified negative on the whole
// isolating interval, so near x0 neither ab nor ab^2 is optimal.
struct Iv3Report {
  TripleContext ctx;
  RatPoly tie;  // [(ab)^3] - [(ab^2)^2], degree 4
  Rat lo;       // isolating interval for the tie root: tie(lo) > 0,
  Rat hi;       // tie(hi) < 0, hi - lo <= 10^-14
  RatPoly q8;   // [(ab)^5] - [(abab^2)^2], degree 8
  RatPoly q13;  // [(ab^2)^5] - [(abab^2)^3], degree 13
  SignCertificate cert8;
  SignCertificate cert13;
};

// Isolates the tie root by bisection to width 10^-14 and certifies both
// difference polynomials negative across the isolating interval, refining
// further if a certificate needs a tighter interval. Throws
// InconsistencyError if the root turns out to be exactly rational or a
// certificate keeps failing after repeated refinement.
Iv3Report iv3_counterexample();

// Two parabolic matrices with translation step sqrt(6)/6, one upper and one
// lower triangular, generate a semigroup that is not free: the distinct
// positive words aabbbaa and baaaaaab evaluate to the same matrix
// [[2, sqrt(6)], [sqrt(6)/2, 2]]. Verifies the collision entry for entry,
// checks that ab and ba still differ, and returns true. Throws
// InconsistencyError if the collision fails to hold.
bool nonfree_demo();

}  // namespace sl2jsr
