#include "doctest.h"

#include "sl2jsr/chebyshev.hpp"
#include "sl2jsr/poly.hpp"
#include "sl2jsr/scalars.hpp"

using namespace sl2jsr;

TEST_CASE("integer square and n-th roots") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(10)) == 3);
  CHECK(isqrt(Int(144)) == 12);
  CHECK(iroot(Int(80), 3) == 4);
  CHECK(iroot(Int(125), 3) == 5);
  Int r;
  CHECK(is_perfect_square(Int(49), &r));
  CHECK(r == 7);
  CHECK_FALSE(is_perfect_square(Int(50)));
  CHECK(is_perfect_square(Int(0)));
}

TEST_CASE("square part extraction") {
  Int s, d;
  split_square(Int(12), s, d);
  CHECK(s == 2);
  CHECK(d == 3);
  split_square(Int(1), s, d);
  CHECK(s == 1);
  CHECK(d == 1);
  split_square(Int(49), s, d);
  CHECK(s == 7);
  CHECK(d == 1);
  split_square(Int(360), s, d);  // 360 = 6^2 * 10
  CHECK(s == 6);
  CHECK(d == 10);
}

TEST_CASE("rational floor") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_floor(Rat(6)) == 6);
}

TEST_CASE("integer parsing") {
  CHECK(parse_int("42") == 42);
  CHECK(parse_int(" -17 ") == -17);
  CHECK(parse_int("+5") == 5);
  CHECK_THROWS_AS(parse_int("12a"), ParseError);
  CHECK_THROWS_AS(parse_int(""), ParseError);
  CHECK_THROWS_AS(parse_int("--3"), ParseError);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-7/2") == Rat(-7, 2));
  CHECK(parse_rat("5") == 5);
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("a/b"), ParseError);
  CHECK(to_string(parse_rat("355/113")) == "355/113");
  CHECK(to_string(parse_rat("-6/4")) == "-3/2");
  CHECK(to_string(Rat(8, 2)) == "4");
  CHECK(to_string(Int(-12)) == "-12");
}

TEST_CASE("sign helpers") {
  CHECK(sign_of(Int(-3)) == -1);
  CHECK(sign_of(Int(0)) == 0);
  CHECK(sign_of(Rat(1, 9)) == 1);
  CHECK(is_integer(Rat(8, 2)));
  CHECK_FALSE(is_integer(Rat(8, 3)));
}

TEST_CASE("lcm") {
  CHECK(lcm_ul(4, 6) == 12);
  CHECK(lcm_ul(1, 9) == 9);
  CHECK(lcm_ul(7, 7) == 7);
}

TEST_CASE("trace polynomial recursion") {
  Poly<Rat> x = Poly<Rat>::variable();
  CHECK(chebyshev(0, x).str() == "2");
  CHECK(chebyshev(1, x).str() == "x");
  CHECK(chebyshev(2, x).str() == "x^2 - 2");
  CHECK(chebyshev(3, x).str() == "x^3 - 3*x");
  CHECK(chebyshev(2, Rat(3)) == 7);
  CHECK(chebyshev(3, Rat(4)) == 52);
  // doubling identity T_{2k} = T_k^2 - 2
  for (unsigned long k : {1ul, 5ul, 6ul, 11ul}) {
    Rat tk = chebyshev(k, Rat(5));
    CHECK(chebyshev(2 * k, Rat(5)) == tk * tk - 2);
  }
  // direct three-term recurrence cross-check
  Rat t(7, 3);
  Rat a = 2, b = t;
  for (unsigned long k = 1; k <= 20; ++k) {
    CHECK(chebyshev(k, t) == b);
    Rat c = t * b - a;
    a = b;
    b = c;
  }
}

TEST_CASE("polynomial ring basics") {
  Poly<Rat> x = Poly<Rat>::variable();
  Poly<Rat> p = (x + 1) * (x + 1);
  CHECK(p.str() == "x^2 + 2*x + 1");
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(3)) == 16);
  CHECK(p.derivative().str() == "2*x + 2");
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  Poly<Rat> q = x * x * x - Rat(3) * x;
  CHECK(q.coeff(3) == 1);
  CHECK(q.coeff(1) == -3);
  CHECK(q.coeff(2) == 0);
  CHECK(q.coeff(17) == 0);
  CHECK(q.leading() == 1);
  CHECK((-q).str() == "-x^3 + 3*x");
}
