#include "sl2jsr/geometry.hpp"

#include <stdexcept>

namespace sl2jsr {

namespace {

void require_unimodular(const Mat2<QuadExt>& M) {
  if (M.det() != QuadExt(1)) throw std::invalid_argument("matrix must have determinant 1");
}

// Order of two boundary points along the real line; ∞ handled by the caller.
int cmp_finite(const BoundaryPoint& p, const BoundaryPoint& q) {
  return p.value().compare(q.value());
}

enum class Sense { Clockwise, Counterclockwise };

// Rotational direction in which a parabolic M pushes the complement of its
// fixed point mu, probed on the first of 0, 1, ∞ that M does not fix.
Sense parabolic_sense(const Mat2<QuadExt>& M, const BoundaryPoint& mu) {
  const BoundaryPoint probes[3] = {
      BoundaryPoint::finite(QuadExt(0)),
      BoundaryPoint::finite(QuadExt(1)),
      BoundaryPoint::infinity(),
  };
  for (const BoundaryPoint& p : probes) {
    if (p == mu) continue;
    BoundaryPoint image = moebius_apply(M, p);
    return betweenness(p, image, mu) ? Sense::Counterclockwise : Sense::Clockwise;
  }
  throw std::logic_error("parabolic element fixing every probe");
}

// Whether M maps the closed ccw arc [p, q] into itself. One of p, q must be
// M's relevant fixed point: the attracting one when testing the forward map,
// so pass M⁻¹ with swapped fixed points to test the reverse arcs. For a
// hyperbolic element the other points flow away from `repel` toward
// `attract`, so the arc is invariant exactly when it stops at or before the
// repelling point. For a parabolic element every other point moves in one
// rotational sense, so invariance only depends on which endpoint is fixed.
bool arc_invariant(const Mat2<QuadExt>& M, ElementClass cls,
                   const BoundaryPoint& attract, const BoundaryPoint& repel,
                   const BoundaryPoint& p, const BoundaryPoint& q) {
  if (cls == ElementClass::Hyperbolic) {
    if (p == attract) return q == repel || betweenness(attract, q, repel);
    if (q == attract) return p == repel || betweenness(repel, p, attract);
    throw std::logic_error("arc endpoint is not a fixed point of the element");
  }
  if (cls == ElementClass::Parabolic) {
    Sense s = parabolic_sense(M, attract);
    if (p == attract) return s == Sense::Clockwise;
    if (q == attract) return s == Sense::Counterclockwise;
    throw std::logic_error("arc endpoint is not a fixed point of the element");
  }
  throw std::logic_error("arc invariance requires a parabolic or hyperbolic element");
}

// The arc bounded by the two distinguished fixed points that both maps leave
// invariant, or the singleton when the fixed points coincide.
std::optional<BoundaryInterval> find_invariant(
    const Mat2<QuadExt>& MA, ElementClass clsA, const BoundaryPoint& aFix,
    const BoundaryPoint& aOther, const Mat2<QuadExt>& MB, ElementClass clsB,
    const BoundaryPoint& bFix, const BoundaryPoint& bOther) {
  if (aFix == bFix) return BoundaryInterval{aFix, bFix};
  bool forward = arc_invariant(MA, clsA, aFix, aOther, aFix, bFix) &&
                 arc_invariant(MB, clsB, bFix, bOther, aFix, bFix);
  bool backward = arc_invariant(MA, clsA, aFix, aOther, bFix, aFix) &&
                  arc_invariant(MB, clsB, bFix, bOther, bFix, aFix);
  if (forward && backward)
    throw std::logic_error("both arcs invariant for a noncommuting pair");
  if (forward) return BoundaryInterval{aFix, bFix};
  if (backward) return BoundaryInterval{bFix, aFix};
  return std::nullopt;
}

}  // namespace

const char* element_class_str(ElementClass c) {
  switch (c) {
    case ElementClass::Identity: return "identity";
    case ElementClass::Elliptic: return "elliptic";
    case ElementClass::Parabolic: return "parabolic";
    case ElementClass::Hyperbolic: return "hyperbolic";
  }
  throw std::logic_error("unreachable");
}

const char* axes_relation_str(AxesRelation r) {
  switch (r) {
    case AxesRelation::Intersecting: return "intersecting";
    case AxesRelation::AsymptoticallyParallel: return "asymptotically_parallel";
    case AxesRelation::Ultraparallel: return "ultraparallel";
  }
  throw std::logic_error("unreachable");
}

const QuadExt& BoundaryPoint::value() const {
  if (inf_) throw std::logic_error("infinite boundary point has no finite value");
  return v_;
}

bool betweenness(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c) {
  if (a == b || b == c || a == c)
    throw std::invalid_argument("betweenness requires pairwise distinct points");
  if (a.is_infinity()) return cmp_finite(b, c) < 0;
  if (b.is_infinity()) return cmp_finite(c, a) < 0;
  if (c.is_infinity()) return cmp_finite(a, b) < 0;
  int ab = cmp_finite(a, b);
  int bc = cmp_finite(b, c);
  int ca = cmp_finite(c, a);
  return (ab < 0 && bc < 0) || (bc < 0 && ca < 0) || (ca < 0 && ab < 0);
}

bool arc_contains(const BoundaryInterval& arc, const BoundaryPoint& p) {
  if (p == arc.from || p == arc.to) return true;
  if (arc.is_singleton()) return false;
  return betweenness(arc.from, p, arc.to);
}

BoundaryPoint moebius_apply(const Mat2<QuadExt>& M, const BoundaryPoint& p) {
  if (p.is_infinity()) {
    if (M.c == QuadExt(0)) return BoundaryPoint::infinity();
    return BoundaryPoint::finite(M.a / M.c);
  }
  const QuadExt& v = p.value();
  QuadExt den = M.c * v + M.d;
  if (den == QuadExt(0)) return BoundaryPoint::infinity();
  return BoundaryPoint::finite((M.a * v + M.b) / den);
}

ElementClass classify_element(const Mat2<QuadExt>& M) {
  require_unimodular(M);
  Mat2<QuadExt> id = Mat2<QuadExt>::identity();
  if (M == id || M == -id) return ElementClass::Identity;
  QuadExt t = M.tr();
  int cmp = (t * t).compare(QuadExt(4));
  if (cmp < 0) return ElementClass::Elliptic;
  if (cmp == 0) return ElementClass::Parabolic;
  return ElementClass::Hyperbolic;
}

std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const Mat2<QuadExt>& M) {
  ElementClass cls = classify_element(M);
  if (cls == ElementClass::Identity || cls == ElementClass::Elliptic)
    throw std::invalid_argument("fixed points require a parabolic or hyperbolic element");
  Mat2<QuadExt> n = normalize_sign(M);
  if (n.c == QuadExt(0)) {
    if (n.a == n.d) {
      // Translation x -> x + b fixing only ∞.
      BoundaryPoint inf = BoundaryPoint::infinity();
      return {inf, inf};
    }
    BoundaryPoint inf = BoundaryPoint::infinity();
    BoundaryPoint fin = BoundaryPoint::finite(n.b / (n.d - n.a));
    // ∞ attracts exactly when |a| > 1; the trace is normalized, so a > 0.
    if ((n.a * n.a).compare(QuadExt(1)) > 0) return {inf, fin};
    return {fin, inf};
  }
  QuadExt two_c = QuadExt(2) * n.c;
  QuadExt diff = n.a - n.d;
  if (cls == ElementClass::Parabolic) {
    BoundaryPoint x = BoundaryPoint::finite(diff / two_c);
    return {x, x};
  }
  QuadExt t = n.tr();
  QuadExt disc = t * t - QuadExt(4);
  std::optional<QuadExt> s = disc.sqrt_in_field();
  if (!s) throw UnsupportedFieldError("fixed points not representable in a single quadratic extension");
  try {
    BoundaryPoint plus = BoundaryPoint::finite((diff + *s) / two_c);
    BoundaryPoint minus = BoundaryPoint::finite((diff - *s) / two_c);
    return {plus, minus};
  } catch (const UnsupportedFieldError&) {
    throw;
  } catch (const ScalarError&) {
    throw UnsupportedFieldError("fixed points not representable in a single quadratic extension");
  }
}

std::optional<std::pair<BoundaryInterval, BoundaryInterval>> coherent_orientation(
    const Mat2<QuadExt>& A, const Mat2<QuadExt>& B) {
  require_unimodular(A);
  require_unimodular(B);
  Mat2<QuadExt> nA = normalize_sign(A);
  Mat2<QuadExt> nB = normalize_sign(B);
  ElementClass clsA = classify_element(nA);
  ElementClass clsB = classify_element(nB);
  if (clsA == ElementClass::Identity || clsA == ElementClass::Elliptic ||
      clsB == ElementClass::Identity || clsB == ElementClass::Elliptic)
    throw std::invalid_argument("orientation requires parabolic or hyperbolic elements");
  if (nA * nB == nB * nA) throw std::invalid_argument("orientation requires a noncommuting pair");

  auto [ap, am] = fixed_points(nA);
  auto [bp, bm] = fixed_points(nB);
  Mat2<QuadExt> iA = nA.inverse();
  Mat2<QuadExt> iB = nB.inverse();

  std::optional<BoundaryInterval> plus =
      find_invariant(nA, clsA, ap, am, nB, clsB, bp, bm);
  if (!plus) return std::nullopt;
  std::optional<BoundaryInterval> minus =
      find_invariant(iA, clsA, am, ap, iB, clsB, bm, bp);
  if (!minus) return std::nullopt;
  return std::make_pair(*plus, *minus);
}

bool well_oriented(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B) {
  if (!coherent_orientation(A, B)) return false;
  return !coherent_orientation(A, normalize_sign(B).inverse());
}

AxesRelation axes_relation(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B) {
  require_unimodular(A);
  require_unimodular(B);
  if (classify_element(A) != ElementClass::Hyperbolic ||
      classify_element(B) != ElementClass::Hyperbolic)
    throw std::invalid_argument("axes require hyperbolic elements");
  auto [ap, am] = fixed_points(A);
  auto [bp, bm] = fixed_points(B);
  if (ap == bp || ap == bm || am == bp || am == bm)
    return AxesRelation::AsymptoticallyParallel;
  bool first = betweenness(ap, bp, am);
  bool second = betweenness(ap, bm, am);
  if (first != second) return AxesRelation::Intersecting;
  return AxesRelation::Ultraparallel;
}

Ordering trichotomy_check(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B) {
  require_unimodular(A);
  require_unimodular(B);
  if (classify_element(A) != ElementClass::Hyperbolic ||
      classify_element(B) != ElementClass::Hyperbolic)
    throw std::invalid_argument("radius comparison requires hyperbolic elements");
  Mat2<QuadExt> nA = normalize_sign(A);
  Mat2<QuadExt> nB = normalize_sign(B);
  QuadExt x = nA.tr();
  QuadExt y = nB.tr();
  QuadExt z = (nA * nB).tr();
  if (z.compare(QuadExt(2)) < 0)
    throw std::invalid_argument("product trace must be at least 2");
  // ρ(A)ρ(B) + (ρ(A)ρ(B))⁻¹ and ρ(A)/ρ(B) + ρ(B)/ρ(A) are the roots
  // s >= d of X² - xy·X + (x² + y² - 4), so ρ(AB) relates to ρ(A)ρ(B) as
  // 2z - xy relates to s - d = sqrt((xy)² - 4(x² + y² - 4)).
  QuadExt u = QuadExt(2) * z - x * y;
  QuadExt radicand = (x * y) * (x * y) - QuadExt(4) * (x * x + y * y - QuadExt(4));
  if (u.sign() < 0) return Ordering::Less;
  int cmp = (u * u).compare(radicand);
  if (cmp < 0) return Ordering::Less;
  if (cmp == 0) return Ordering::Equal;
  return Ordering::Greater;
}

}  // namespace sl2jsr
