#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "sl2jsr/fixtures.hpp"
#include "sl2jsr/geometry.hpp"
#include "sl2jsr/interval.hpp"

using namespace sl2jsr;

namespace {

BoundaryPoint bp(long v) { return BoundaryPoint::finite(QuadExt(v)); }
BoundaryPoint bpr(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return BoundaryPoint::finite(QuadExt(r));
}
BoundaryPoint binf() { return BoundaryPoint::infinity(); }

Mat2<QuadExt> qfix(const std::string& name) { return named_fixture(name); }

bool endpoint_images_inside(const Mat2<QuadExt>& M, const BoundaryInterval& arc) {
  return arc_contains(arc, moebius_apply(M, arc.from)) &&
         arc_contains(arc, moebius_apply(M, arc.to));
}

std::string random_mixed_word(std::mt19937_64& rng) {
  for (;;) {
    std::uniform_int_distribution<int> len_dist(2, 7);
    int len = len_dist(rng);
    std::string w;
    for (int i = 0; i < len; ++i) w.push_back((rng() & 1) ? 'b' : 'a');
    if (w.find('a') != std::string::npos && w.find('b') != std::string::npos) return w;
  }
}

}  // namespace

TEST_CASE("element classification") {
  CHECK(classify_element(qfix("L")) == ElementClass::Parabolic);
  CHECK(classify_element(qfix("N")) == ElementClass::Parabolic);
  CHECK(classify_element(qfix("G")) == ElementClass::Parabolic);
  CHECK(classify_element(qfix("C")) == ElementClass::Hyperbolic);
  CHECK(classify_element(qfix("D")) == ElementClass::Hyperbolic);
  CHECK(classify_element(qfix("E")) == ElementClass::Hyperbolic);

  Mat2<QuadExt> id = Mat2<QuadExt>::identity();
  CHECK(classify_element(id) == ElementClass::Identity);
  CHECK(classify_element(-id) == ElementClass::Identity);
  Mat2<QuadExt> rot{QuadExt(0), QuadExt(-1), QuadExt(1), QuadExt(0)};
  CHECK(classify_element(rot) == ElementClass::Elliptic);
  CHECK(classify_element(-qfix("C")) == ElementClass::Hyperbolic);

  Mat2<QuadExt> twice{QuadExt(2), QuadExt(0), QuadExt(0), QuadExt(2)};
  CHECK_THROWS_AS(classify_element(twice), std::invalid_argument);
  CHECK(std::string(element_class_str(ElementClass::Parabolic)) == "parabolic");
}

TEST_CASE("fixed points of the named matrices") {
  auto [lp, lm] = fixed_points(qfix("L"));
  CHECK(lp == bp(0));
  CHECK(lm == bp(0));

  auto [np, nm] = fixed_points(qfix("N"));
  CHECK(np == binf());
  CHECK(nm == binf());

  auto [gp, gm] = fixed_points(qfix("G"));
  CHECK(gp == bp(1));
  CHECK(gm == bp(1));

  auto [cp, cm] = fixed_points(qfix("C"));
  CHECK(cp == BoundaryPoint::finite(QuadExt(Int(4), Int(2), Int(1), Int(6))));
  CHECK(cm == BoundaryPoint::finite(QuadExt(Int(4), Int(-2), Int(1), Int(6))));

  auto [dp, dm] = fixed_points(qfix("D"));
  CHECK(dp == BoundaryPoint::finite(QuadExt(Int(5), Int(1), Int(2), Int(21))));
  CHECK(dm == BoundaryPoint::finite(QuadExt(Int(5), Int(-1), Int(2), Int(21))));

  auto [ep, em] = fixed_points(qfix("E"));
  CHECK(ep == BoundaryPoint::finite(QuadExt(Int(4), Int(-2), Int(1), Int(6))));
  CHECK(em == bp(1));

  // The golden-ratio pair for the product LN = [[1,1],[1,2]].
  auto [pp, pm] = fixed_points(to_quadext_mat(ln_word("ab")));
  CHECK(pp == BoundaryPoint::finite(QuadExt(Int(-1), Int(1), Int(2), Int(5))));
  CHECK(pm == BoundaryPoint::finite(QuadExt(Int(-1), Int(-1), Int(2), Int(5))));

  // Sign normalization happens internally.
  auto [cp2, cm2] = fixed_points(-qfix("C"));
  CHECK(cp2 == cp);
  CHECK(cm2 == cm);

  // Upper-triangular cases: which endpoint attracts depends on the corner.
  Mat2<QuadExt> stretch{QuadExt(2), QuadExt(0), QuadExt(0), QuadExt(Rat(1, 2))};
  auto [sp, sm] = fixed_points(stretch);
  CHECK(sp == binf());
  CHECK(sm == bp(0));
  Mat2<QuadExt> shrink{QuadExt(Rat(1, 2)), QuadExt(0), QuadExt(0), QuadExt(2)};
  auto [hp, hm] = fixed_points(shrink);
  CHECK(hp == bp(0));
  CHECK(hm == binf());
  Mat2<QuadExt> shift{QuadExt(1), QuadExt(5), QuadExt(0), QuadExt(1)};
  auto [tp, tm] = fixed_points(shift);
  CHECK(tp == binf());
  CHECK(tm == binf());

  Mat2<QuadExt> rot{QuadExt(0), QuadExt(-1), QuadExt(1), QuadExt(0)};
  CHECK_THROWS_AS(fixed_points(rot), std::invalid_argument);
  CHECK_THROWS_AS(fixed_points(Mat2<QuadExt>::identity()), std::invalid_argument);
}

TEST_CASE("fixed points outside a single quadratic extension") {
  // Trace 3*sqrt(2) gives eigenvalue discriminant 14, mixing sqrt(2) with
  // sqrt(14).
  Mat2<QuadExt> m1{QuadExt(Int(0), Int(3), Int(1), Int(2)), QuadExt(1), QuadExt(-1), QuadExt(0)};
  REQUIRE(m1.det() == QuadExt(1));
  CHECK_THROWS_AS(fixed_points(m1), UnsupportedFieldError);

  // Trace 4 with entries in the sqrt(2) field needs sqrt(3) on top.
  Mat2<QuadExt> m2{QuadExt(Int(2), Int(1), Int(1), Int(2)), QuadExt(1), QuadExt(1),
                   QuadExt(Int(2), Int(-1), Int(1), Int(2))};
  REQUIRE(m2.det() == QuadExt(1));
  CHECK_THROWS_AS(fixed_points(m2), UnsupportedFieldError);
}

TEST_CASE("betweenness on the boundary circle") {
  CHECK(betweenness(bp(0), bp(1), binf()));
  CHECK_FALSE(betweenness(bp(1), bp(0), binf()));
  CHECK(betweenness(bp(2), bp(5), bp(-1)));
  CHECK_FALSE(betweenness(bp(2), bp(-1), bp(5)));
  CHECK(betweenness(binf(), bp(3), bp(7)));
  CHECK_FALSE(betweenness(binf(), bp(7), bp(3)));
  CHECK(betweenness(bp(5), binf(), bp(2)));
  CHECK_FALSE(betweenness(bp(2), binf(), bp(5)));

  CHECK_THROWS_AS(betweenness(bp(1), bp(1), bp(2)), std::invalid_argument);
  CHECK_THROWS_AS(betweenness(binf(), binf(), bp(2)), std::invalid_argument);
  CHECK_THROWS_AS(betweenness(bp(1), bp(2), bp(1)), std::invalid_argument);
}

TEST_CASE("betweenness is preserved by unimodular integer maps") {
  std::mt19937_64 rng(0x5eed0001ULL);
  std::vector<BoundaryPoint> pool = {bp(-3), bp(-1), bp(0), bpr(1, 2), bp(1),
                                     bp(2),  bp(7),  binf()};
  for (int iter = 0; iter < 200; ++iter) {
    std::string w = random_mixed_word(rng);
    Mat2<QuadExt> M = to_quadext_mat(ln_word(w));
    if (rng() & 1) M = M.inverse();
    size_t i = rng() % pool.size();
    size_t j = rng() % pool.size();
    size_t k = rng() % pool.size();
    if (i == j || j == k || i == k) continue;
    bool before = betweenness(pool[i], pool[j], pool[k]);
    bool after = betweenness(moebius_apply(M, pool[i]), moebius_apply(M, pool[j]),
                             moebius_apply(M, pool[k]));
    CHECK(before == after);
  }
}

TEST_CASE("moebius action samples") {
  CHECK(moebius_apply(qfix("L"), binf()) == bp(1));
  CHECK(moebius_apply(qfix("N"), binf()) == binf());
  CHECK(moebius_apply(qfix("N"), bp(3)) == bp(4));
  CHECK(moebius_apply(qfix("E"), bp(1)) == bp(1));
  // L sends -1 to the point at infinity.
  CHECK(moebius_apply(qfix("L"), bp(-1)) == binf());
}

TEST_CASE("arc containment") {
  BoundaryInterval pos{bp(0), binf()};
  CHECK(arc_contains(pos, bp(0)));
  CHECK(arc_contains(pos, binf()));
  CHECK(arc_contains(pos, bp(5)));
  CHECK_FALSE(arc_contains(pos, bp(-2)));

  BoundaryInterval wrap{bp(1), bp(0)};
  CHECK(arc_contains(wrap, bp(2)));
  CHECK(arc_contains(wrap, binf()));
  CHECK(arc_contains(wrap, bp(-5)));
  CHECK_FALSE(arc_contains(wrap, bpr(1, 2)));

  BoundaryInterval point{bp(3), bp(3)};
  CHECK(point.is_singleton());
  CHECK(arc_contains(point, bp(3)));
  CHECK_FALSE(arc_contains(point, bp(4)));
  CHECK(point.str() == "[3,3]");
  CHECK(BoundaryInterval{bp(0), bp(1)}.str() == "[0,1]");
}

TEST_CASE("orientation of the named pairs") {
  Mat2<QuadExt> C = qfix("C"), D = qfix("D"), E = qfix("E"), G = qfix("G");
  Mat2<QuadExt> L = qfix("L"), N = qfix("N");
  QuadExt gamma_plus(Int(4), Int(2), Int(1), Int(6));
  QuadExt gamma_minus(Int(4), Int(-2), Int(1), Int(6));

  CHECK_FALSE(coherent_orientation(G, L).has_value());

  auto gl = coherent_orientation(G.inverse(), L);
  REQUIRE(gl.has_value());
  CHECK(gl->first.from == bp(0));
  CHECK(gl->first.to == bp(1));
  CHECK(gl->second.from == bp(1));
  CHECK(gl->second.to == bp(0));

  auto ln = coherent_orientation(L, N);
  REQUIRE(ln.has_value());
  CHECK(ln->first.from == bp(0));
  CHECK(ln->first.to == binf());
  CHECK(ln->second.from == binf());
  CHECK(ln->second.to == bp(0));

  auto cg = coherent_orientation(C, G);
  REQUIRE(cg.has_value());
  CHECK(cg->first.from == bp(1));
  CHECK(cg->first.to == BoundaryPoint::finite(gamma_plus));
  CHECK(cg->second.from == BoundaryPoint::finite(gamma_minus));
  CHECK(cg->second.to == bp(1));

  auto eg = coherent_orientation(E, G);
  REQUIRE(eg.has_value());
  CHECK(eg->first.from == bp(1));
  CHECK(eg->first.to == BoundaryPoint::finite(gamma_minus));
  CHECK(eg->second.is_singleton());
  CHECK(eg->second.from == bp(1));

  CHECK(well_oriented(C, D));
  CHECK(well_oriented(C, G));
  CHECK_FALSE(well_oriented(E, G));
  CHECK_FALSE(well_oriented(G, L));
  CHECK(well_oriented(G.inverse(), L));
  CHECK(well_oriented(L, N));

  // Swapping the pair keeps the same arcs.
  auto nl = coherent_orientation(N, L);
  REQUIRE(nl.has_value());
  CHECK(nl->first.from == ln->first.from);
  CHECK(nl->first.to == ln->first.to);
  CHECK(nl->second.from == ln->second.from);
  CHECK(nl->second.to == ln->second.to);

  CHECK_THROWS_AS(coherent_orientation(C, C), std::invalid_argument);
  CHECK_THROWS_AS(coherent_orientation(C, Mat2<QuadExt>::identity()), std::invalid_argument);
}

TEST_CASE("axes of hyperbolic pairs") {
  Mat2<QuadExt> C = qfix("C"), D = qfix("D"), E = qfix("E");
  CHECK(axes_relation(D, E) == AxesRelation::Intersecting);
  CHECK(axes_relation(C, E) == AxesRelation::AsymptoticallyParallel);
  CHECK(axes_relation(C, D) == AxesRelation::Ultraparallel);
  CHECK(axes_relation(E, D) == AxesRelation::Intersecting);
  CHECK(axes_relation(C, C.inverse()) == AxesRelation::AsymptoticallyParallel);
  CHECK_THROWS_AS(axes_relation(qfix("L"), C), std::invalid_argument);
  CHECK(std::string(axes_relation_str(AxesRelation::Ultraparallel)) == "ultraparallel");
}

TEST_CASE("product radius against the radius product") {
  Mat2<QuadExt> C = qfix("C"), D = qfix("D"), E = qfix("E");
  CHECK(trichotomy_check(D, E) == Ordering::Less);
  CHECK(trichotomy_check(C, E.inverse()) == Ordering::Equal);
  CHECK(trichotomy_check(C, D) == Ordering::Greater);
  CHECK(trichotomy_check(C, E) == Ordering::Less);

  CHECK_THROWS_AS(trichotomy_check(qfix("L"), C), std::invalid_argument);

  // Hyperbolic pair whose product has trace 1.
  Mat2<QuadExt> A{QuadExt(3), QuadExt(1), QuadExt(2), QuadExt(1)};
  Mat2<QuadExt> B{QuadExt(1), QuadExt(-2), QuadExt(-1), QuadExt(3)};
  REQUIRE((A * B).tr() == QuadExt(1));
  CHECK_THROWS_AS(trichotomy_check(A, B), std::invalid_argument);
}

TEST_CASE("random nonnegative pairs: arcs and radius order") {
  std::mt19937_64 rng(0x5eed0002ULL);
  int done = 0;
  while (done < 60) {
    std::string wa = random_mixed_word(rng);
    std::string wb = random_mixed_word(rng);
    Mat2<Int> ia = ln_word(wa);
    Mat2<Int> ib = ln_word(wb);
    if (ia * ib == ib * ia) continue;
    ++done;
    Mat2<QuadExt> A = to_quadext_mat(ia);
    Mat2<QuadExt> B = to_quadext_mat(ib);

    auto co = coherent_orientation(A, B);
    REQUIRE(co.has_value());
    // Literal invariance of the arcs under the generators.
    CHECK(endpoint_images_inside(A, co->first));
    CHECK(endpoint_images_inside(B, co->first));
    CHECK(endpoint_images_inside(A.inverse(), co->second));
    CHECK(endpoint_images_inside(B.inverse(), co->second));
    // Attracting arc inside the nonnegative reals, repelling arc outside.
    CHECK_FALSE(arc_contains(co->first, bp(-1)));
    CHECK_FALSE(arc_contains(co->second, bp(1)));

    Ordering ord = trichotomy_check(A, B);
    // Numeric cross-check with certified enclosures.
    AlgebraicRadius ra(A.tr(), 1);
    AlgebraicRadius rb(B.tr(), 1);
    AlgebraicRadius rab((A * B).tr(), 1);
    RatInterval prod = iv_mul(radius_bounds(ra, 128), radius_bounds(rb, 128));
    RatInterval lhs = radius_bounds(rab, 128);
    if (lhs.hi < prod.lo) CHECK(ord == Ordering::Less);
    if (lhs.lo > prod.hi) CHECK(ord == Ordering::Greater);
  }
}

TEST_CASE("fixture lookup") {
  CHECK(named_fixture("C").tr() == QuadExt(10));
  CHECK(named_fixture("E").det() == QuadExt(1));
  CHECK(named_fixture("E").tr() == QuadExt(Rat(5, 2)));
  CHECK_THROWS_AS(named_fixture("Z"), ParseError);
  CHECK(fixture_names().size() == 6);
  CHECK(ln_word("ab").tr() == Int(3));
}
