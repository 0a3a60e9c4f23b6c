#include "sl2jsr/lab.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sl2jsr/classifier.hpp"
#include "sl2jsr/interval.hpp"
#include "sl2jsr/mat2.hpp"
#include "sl2jsr/quadext.hpp"

namespace sl2jsr {

namespace {

Rat rq(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat abs_rat(const Rat& v) { return sign_of(v) < 0 ? Rat(-v) : v; }

}  // namespace

RatPoly trace_poly(const std::string& w, const TripleContext& ctx) {
  RatPoly x = RatPoly::variable();
  Rat shift = ctx.delta - 2;
  RatPoly z = x * x + RatPoly(shift);
  auto cc = CharContext<RatPoly>::triple(RatPoly(ctx.x_a), x, z);
  return cc.char_of(w);
}

Iv1Report iv1_counterexample() {
  TripleContext ctx{rq(101, 50), rq(-1, 50)};
  RatPoly difference = trace_poly("abb", ctx) - trace_poly("bbb", ctx);
  RatPoly expected(std::vector<Rat>{rq(-101, 50), rq(49, 50)});
  if (difference != expected) {
    throw InconsistencyError("trace gap of abb vs bbb is not (49x - 101)/50: got " +
                             difference.str());
  }
  Rat witness = rq(11, 5);
  Rat value = difference.eval(witness);
  if (sign_of(value) <= 0) {
    throw InconsistencyError("trace gap of abb vs bbb is not positive at x = 11/5");
  }
  Rat trace_abb = trace_poly("abb", ctx).eval(witness);
  Rat trace_bbb = trace_poly("bbb", ctx).eval(witness);
  Ordering verdict = radius_cmp(AlgebraicRadius(QuadExt(trace_abb), 3),
                                AlgebraicRadius(QuadExt(witness), 1));
  if (verdict != Ordering::Greater) {
    throw InconsistencyError("abb does not outgrow b per letter at x = 11/5");
  }
  return {ctx, difference, witness, value, trace_abb, trace_bbb, verdict};
}

Iv2Report iv2_counterexample() {
  TripleContext ctx{rq(101, 50), Rat(0)};
  RatPoly difference =
      trace_poly("abbabbabbabb", ctx) - trace_poly("abbbabbbabbb", ctx);
  RatPoly expected(std::vector<Rat>{
      rq(2050401, 6250000), rq(1618727, 31250), rq(105559, 1250),
      rq(-2080903, 125000), rq(-46103, 500), rq(-909, 50), rq(98103, 2500),
      rq(303, 25), rq(-9, 1), rq(-101, 50), rq(1, 1)});
  if (difference != expected) {
    throw InconsistencyError(
        "degree-10 trace difference of (abb)^4 vs (abbb)^3 does not match its "
        "pinned coefficients: got " +
        difference.str());
  }
  Rat witness = rq(21, 10);
  Rat value = difference.eval(witness);
  if (sign_of(value) >= 0) {
    throw InconsistencyError(
        "trace difference of (abb)^4 vs (abbb)^3 is not negative at x = 21/10");
  }
  return {ctx, difference, witness, value};
}

Iv3Report iv3_counterexample() {
  TripleContext ctx{rq(101, 50), rq(1, 50)};
  RatPoly tie = trace_poly("ababab", ctx) - trace_poly("abbabb", ctx);
  RatPoly q8 = trace_poly("ababababab", ctx) - trace_poly("ababbababb", ctx);
  RatPoly q13 =
      trace_poly("abbabbabbabbabb", ctx) - trace_poly("ababbababbababb", ctx);
  if (tie.degree() != 4) {
    throw InconsistencyError("tie polynomial degree is not 4: got " + tie.str());
  }
  if (q8.degree() != 8 || q13.degree() != 13) {
    throw InconsistencyError("difference polynomial degrees are not 8 and 13");
  }

  // |q'| on [0, 21/10] is at most the sum of i * |c_i| * (21/10)^(i-1).
  const Rat top = rq(21, 10);
  auto slope_bound = [&top](const RatPoly& q) {
    Rat bound(0);
    Rat power(1);
    const auto& cs = q.coeffs();
    for (std::size_t i = 1; i < cs.size(); ++i) {
      bound += Rat(static_cast<long>(i)) * abs_rat(cs[i]) * power;
      power *= top;
    }
    return bound;
  };
  const Rat bound8 = slope_bound(q8);
  const Rat bound13 = slope_bound(q13);

  Rat lo(2);
  Rat hi = top;
  Rat width = rq(1, 100000000000000L);  // 10^-14, pinned
  auto refine = [&]() {
    auto iv = isolate_root(tie, lo, hi, width);
    if (iv.first == iv.second) {
      throw InconsistencyError("tie root is exactly rational at " +
                               to_string(iv.first) +
                               "; no open isolating interval exists");
    }
    lo = iv.first;
    hi = iv.second;
    width /= 2;
  };
  refine();

  auto certify = [&](const RatPoly& q, const Rat& bound) {
    SignCertificate cert{q.eval(lo), q.eval(hi), bound, false};
    Rat climb = bound * (hi - lo);
    Rat worst_lo = cert.at_lo + climb;
    Rat worst_hi = cert.at_hi + climb;
    cert.negative = sign_of(worst_lo) < 0 && sign_of(worst_hi) < 0;
    return cert;
  };

  for (int round = 0; round < 64; ++round) {
    SignCertificate cert8 = certify(q8, bound8);
    SignCertificate cert13 = certify(q13, bound13);
    if (cert8.negative && cert13.negative) {
      return {ctx, tie, lo, hi, q8, q13, cert8, cert13};
    }
    refine();
  }
  throw InconsistencyError(
      "sign certificates still fail after repeated interval refinement");
}

bool nonfree_demo() {
  const QuadExt step(Int(0), Int(1), Int(6), Int(6));  // sqrt(6)/6
  const Mat2<QuadExt> A(QuadExt(1), step, QuadExt(0), QuadExt(1));
  const Mat2<QuadExt> B(QuadExt(1), QuadExt(0), step, QuadExt(1));
  Mat2<QuadExt> lhs = word_eval("aabbbaa", A, B);
  Mat2<QuadExt> rhs = word_eval("baaaaaab", A, B);
  const Mat2<QuadExt> common(QuadExt(2), QuadExt::sqrt_of(Int(6)),
                             QuadExt(Int(0), Int(1), Int(2), Int(6)), QuadExt(2));
  if (lhs != rhs || lhs != common) {
    throw InconsistencyError("parabolic collision identity failed: aabbbaa gives " +
                             mat2_str(lhs) + ", baaaaaab gives " + mat2_str(rhs));
  }
  if (word_eval("ab", A, B) == word_eval("ba", A, B)) {
    throw InconsistencyError("generators commute; the collision would be trivial");
  }
  return true;
}

}  // namespace sl2jsr
