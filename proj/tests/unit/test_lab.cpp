#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "sl2jsr/characters.hpp"
#include "sl2jsr/lab.hpp"
#include "sl2jsr/mat2.hpp"
#include "sl2jsr/quadext.hpp"
#include "sl2jsr/word.hpp"

using namespace sl2jsr;

namespace {

Rat rq(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

RatPoly make_poly(std::vector<Rat> cs) { return RatPoly(std::move(cs)); }

std::string random_positive_word(std::mt19937_64& rng, std::size_t len) {
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w += (rng() % 2 ? 'b' : 'a');
  return w;
}

}  // namespace

TEST_CASE("trace polynomials in the symbolic-b context") {
  TripleContext ctx{rq(101, 50), Rat(0)};

  // [abb] = [ab][b] - [a] = (x^2 - 2)x - 101/50
  CHECK(trace_poly("abb", ctx) == make_poly({rq(-101, 50), Rat(-2), Rat(0), Rat(1)}));
  // [bbb] = x^3 - 3x regardless of the offset
  RatPoly cube = make_poly({Rat(0), Rat(-3), Rat(0), Rat(1)});
  CHECK(trace_poly("bbb", ctx) == cube);
  CHECK(trace_poly("bbb", TripleContext{rq(7, 3), rq(-2, 9)}) == cube);
  // [a] is the frozen constant, [] gives 2, [ab] = x^2 - 2 + delta
  CHECK(trace_poly("a", ctx) == RatPoly(rq(101, 50)));
  CHECK(trace_poly("", ctx) == RatPoly(2));
  TripleContext shifted{rq(101, 50), rq(1, 50)};
  CHECK(trace_poly("ab", shifted) == make_poly({rq(-99, 50), Rat(0), Rat(1)}));
  // inverse letters reduce through [aB] = [a][b] - [ab]
  CHECK(trace_poly("aB", shifted) ==
        make_poly({rq(99, 50), rq(101, 50), Rat(-1)}));
}

TEST_CASE("trace polynomial degrees and product identity") {
  TripleContext ctx{rq(5, 2), rq(-1, 7)};
  std::mt19937_64 rng(0x1ab0001);

  for (unsigned long k = 1; k <= 6; ++k) {
    CHECK(trace_poly(std::string(k, 'b'), ctx).degree() == static_cast<long>(k));
  }

  for (int trial = 0; trial < 60; ++trial) {
    std::string w = random_positive_word(rng, 1 + rng() % 8);
    CHECK(trace_poly(w, ctx).degree() <= static_cast<long>(w.size()));
  }

  // [w][u] = [wu] + [w u^-1] as an identity between polynomials
  for (int trial = 0; trial < 40; ++trial) {
    std::string w = random_positive_word(rng, 1 + rng() % 5);
    std::string u = random_positive_word(rng, 1 + rng() % 5);
    RatPoly lhs = trace_poly(w, ctx) * trace_poly(u, ctx);
    RatPoly rhs = trace_poly(w + u, ctx) + trace_poly(w + word_inverse(u), ctx);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("trace polynomial instantiation matches the rational context") {
  TripleContext ctx{rq(101, 50), rq(3, 11)};
  std::mt19937_64 rng(0x1ab0002);
  for (int trial = 0; trial < 30; ++trial) {
    std::string w = random_positive_word(rng, 1 + rng() % 7);
    Rat x0 = rq(2 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 4));
    Rat z0 = x0 * x0 - 2 + ctx.delta;
    auto cc = CharContext<Rat>::triple(ctx.x_a, x0, z0);
    CHECK(trace_poly(w, ctx).eval(x0) == cc.char_of(w));
  }
}

TEST_CASE("mixed word overtakes the pure power below the square offset") {
  Iv1Report rep = iv1_counterexample();
  CHECK(rep.ctx.x_a == rq(101, 50));
  CHECK(rep.ctx.delta == rq(-1, 50));
  CHECK(rep.difference == make_poly({rq(-101, 50), rq(49, 50)}));
  CHECK(rep.witness == rq(11, 5));
  CHECK(rep.value == rq(17, 125));
  CHECK(rep.trace_abb == rq(523, 125));
  CHECK(rep.trace_bbb == rq(506, 125));
  CHECK(rep.value == rep.trace_abb - rep.trace_bbb);
  CHECK(rep.verdict == Ordering::Greater);
  // below the crossover the pure power still wins
  CHECK(rep.difference.eval(Rat(2)) == rq(-3, 50));
}

TEST_CASE("longer syllable overtakes at equal product traces") {
  Iv2Report rep = iv2_counterexample();
  CHECK(rep.ctx.x_a == rq(101, 50));
  CHECK(rep.ctx.delta == Rat(0));
  CHECK(rep.difference.degree() == 10);
  CHECK(rep.difference ==
        make_poly({rq(2050401, 6250000), rq(1618727, 31250), rq(105559, 1250),
                   rq(-2080903, 125000), rq(-46103, 500), rq(-909, 50),
                   rq(98103, 2500), rq(303, 25), Rat(-9), rq(-101, 50), Rat(1)}));
  CHECK(rep.difference.leading() == Rat(1));
  CHECK(rep.difference.coeff(0) == rq(2050401, 6250000));
  CHECK(rep.witness == rq(21, 10));
  CHECK(rep.value == rq(-5030762379L, 12500000000L));
  CHECK(sign_of(rep.value) < 0);
}

TEST_CASE("tie point where the concatenation beats both factors") {
  Iv3Report rep = iv3_counterexample();
  CHECK(rep.ctx.x_a == rq(101, 50));
  CHECK(rep.ctx.delta == rq(1, 50));

  // the two length-6 product traces feeding the tie
  CHECK(trace_poly("ababab", rep.ctx) ==
        make_poly({rq(-227799, 125000), Rat(0), rq(21903, 2500), Rat(0),
                   rq(-297, 50), Rat(0), Rat(1)}));
  CHECK(trace_poly("abbabb", rep.ctx) ==
        make_poly({rq(5201, 2500), rq(9999, 1250), rq(9801, 2500), rq(-101, 25),
                   rq(-99, 25), Rat(0), Rat(1)}));
  CHECK(rep.tie == make_poly({rq(-487849, 125000), rq(-9999, 1250),
                              rq(6051, 1250), rq(101, 25), rq(-99, 50)}));

  // isolating interval: inside [2, 21/10], width at most 10^-14, sign change,
  // and it straddles 2.0255364739899761 (the root to 17 digits)
  CHECK(rep.lo >= Rat(2));
  CHECK(rep.hi <= rq(21, 10));
  Rat width = rep.hi - rep.lo;
  CHECK(width <= rq(1, 100000000000000L));
  CHECK(sign_of(rep.tie.eval(rep.lo)) > 0);
  CHECK(sign_of(rep.tie.eval(rep.hi)) < 0);
  Int scale = Int(10000000000000000L);  // 10^16
  CHECK(rep.hi >= Rat(Int(20255364739899761L)) / Rat(scale));
  CHECK(rep.lo <= Rat(Int(20255364739899762L)) / Rat(scale));
  // the nearby rational 2.0255364739899213 sits strictly below the root
  Rat below = Rat(Int(20255364739899213L)) / Rat(scale);
  CHECK(sign_of(rep.tie.eval(below)) > 0);
  CHECK(rep.lo > below);

  CHECK(rep.q8.degree() == 8);
  CHECK(rep.q13.degree() == 13);
  CHECK(rep.q8 ==
        make_poly({rq(-4848913049L, 312500000L), rq(-73002699, 3125000),
                   rq(47923951, 1562500), rq(2717203, 62500), rq(-451168, 15625),
                   rq(-29997, 1250), rq(7926, 625), rq(101, 25), rq(-99, 50)}));
  CHECK(rep.q13 ==
        make_poly({rq(-851598180049L, 15625000000L),
                   rq(-2889590011653L, 15625000000L),
                   rq(-3371894276547L, 15625000000L),
                   rq(686549005499L, 15625000000L), rq(2589299529L, 7812500),
                   rq(13705406619L, 62500000), rq(-10053843, 78125),
                   rq(-126158511, 625000), rq(-303, 25), rq(483917, 6250),
                   rq(9999, 500), rq(-8301, 500), rq(-101, 25), rq(99, 50)}));

  for (const SignCertificate* cert : {&rep.cert8, &rep.cert13}) {
    CHECK(cert->negative);
    CHECK(sign_of(cert->at_lo) < 0);
    CHECK(sign_of(cert->at_hi) < 0);
    CHECK(sign_of(cert->slope_bound) > 0);
    Rat climb = cert->slope_bound * width;
    Rat worst_lo = cert->at_lo + climb;
    Rat worst_hi = cert->at_hi + climb;
    CHECK(sign_of(worst_lo) < 0);
    CHECK(sign_of(worst_hi) < 0);
  }
  CHECK(rep.cert8.at_lo == rep.q8.eval(rep.lo));
  CHECK(rep.cert13.at_hi == rep.q13.eval(rep.hi));
}

TEST_CASE("parabolic pair with a positive-word collision") {
  CHECK(nonfree_demo());

  const QuadExt step(Int(0), Int(1), Int(6), Int(6));
  const Mat2<QuadExt> A(QuadExt(1), step, QuadExt(0), QuadExt(1));
  const Mat2<QuadExt> B(QuadExt(1), QuadExt(0), step, QuadExt(1));
  Mat2<QuadExt> lhs = word_eval("aabbbaa", A, B);
  Mat2<QuadExt> rhs = word_eval("baaaaaab", A, B);
  CHECK(lhs == rhs);
  CHECK(lhs.tr() == QuadExt(4));
  CHECK(lhs.a == QuadExt(2));
  CHECK(lhs.b == QuadExt::sqrt_of(Int(6)));
  CHECK(lhs.c == QuadExt(Int(0), Int(1), Int(2), Int(6)));
  CHECK(lhs.d == QuadExt(2));
  CHECK(lhs.det() == QuadExt(1));
  CHECK(word_eval("ab", A, B) != word_eval("ba", A, B));
  // the step itself is 1/sqrt(6): squaring gives 1/6
  CHECK(step * step == QuadExt(rq(1, 6)));
}
