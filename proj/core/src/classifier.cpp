#include "sl2jsr/classifier.hpp"

#include <utility>

namespace sl2jsr {

namespace {

JsrReport make_report(OptimalitySet opt, AlgebraicRadius radius, unsigned long precision) {
  std::string approx = radius_decimal(radius, precision);
  return JsrReport{std::move(opt), std::move(radius), std::move(approx)};
}

ClassifyResult out_of_scope(std::string reason, bool swapped) {
  return {PairClassification{CaseLabel::OutOfScope, swapped, std::move(reason)}, std::nullopt};
}

Int int_trace(const QuadExt& t) {
  Rat r = t.rational_value();
  return r.get_num();
}

enum class Overlap { Empty, Singleton, Bigger };

// Intersection size of two closed arcs, assuming the intersection is a
// finite point set or an arc (whose endpoints are then endpoints of the
// inputs): 0 points, exactly 1, or more than a single point.
Overlap arc_overlap(const BoundaryInterval& p, const BoundaryInterval& q) {
  std::vector<BoundaryPoint> uniq;
  for (const BoundaryPoint& e : {p.from, p.to, q.from, q.to}) {
    bool seen = false;
    for (const BoundaryPoint& u : uniq) {
      if (u == e) {
        seen = true;
        break;
      }
    }
    if (!seen) uniq.push_back(e);
  }
  int count = 0;
  for (const BoundaryPoint& e : uniq) {
    if (arc_contains(p, e) && arc_contains(q, e)) ++count;
  }
  if (count == 0) return Overlap::Empty;
  if (count == 1) return Overlap::Singleton;
  return Overlap::Bigger;
}

bool parabolic_shares_fixed_point(const Mat2<QuadExt>& para, const Mat2<QuadExt>& other) {
  BoundaryPoint mu = fixed_points(para).first;
  auto [op, om] = fixed_points(other);
  return mu == op || mu == om;
}

}  // namespace

const char* case_label_str(CaseLabel label) {
  switch (label) {
    case CaseLabel::Commuting: return "Commuting";
    case CaseLabel::I_Intersecting: return "I_Intersecting";
    case CaseLabel::II_Parallel_1: return "II_Parallel_1";
    case CaseLabel::II_Parallel_2: return "II_Parallel_2";
    case CaseLabel::II_ParallelUnequal: return "II_ParallelUnequal";
    case CaseLabel::III_EqualTraceWellOriented: return "III_EqualTraceWellOriented";
    case CaseLabel::IV_1: return "IV_1";
    case CaseLabel::IV_2: return "IV_2";
    case CaseLabel::IV_3a: return "IV_3a";
    case CaseLabel::IV_3b: return "IV_3b";
    case CaseLabel::OutOfScope: return "OutOfScope";
  }
  throw std::logic_error("unreachable");
}

CaseLabel iv_branch(const Int& trA, const Int& trB, const Int& trAB) {
  if (trA < 2 || trA >= trB)
    throw std::invalid_argument("subcase decision requires 2 <= trA < trB");
  Int y2 = trB * trB - 2;
  if (trAB < y2) return CaseLabel::IV_1;
  if (trAB == y2) return CaseLabel::IV_2;
  Int t3 = trAB * trAB * trAB - 3 * trAB;
  Int w = trAB * trB - trA;
  Int t22 = w * w - 2;
  Int gap = t3 - t22;
  if (abs(gap) < 2)
    throw InconsistencyError("trace dichotomy violated: |tr((AB)^3) - tr((AB^2)^2)| < 2");
  return gap > 0 ? CaseLabel::IV_3a : CaseLabel::IV_3b;
}

ClassifyResult classify_pair(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B,
                             unsigned long precision) {
  if (A.det() != QuadExt(1) || B.det() != QuadExt(1))
    throw std::invalid_argument("matrices must have determinant 1");
  Mat2<QuadExt> a = normalize_sign(A);
  Mat2<QuadExt> b = normalize_sign(B);
  ElementClass clsA = classify_element(a);
  ElementClass clsB = classify_element(b);
  if (clsA == ElementClass::Elliptic || clsB == ElementClass::Elliptic)
    throw std::invalid_argument("elliptic element has no dominant real eigenvalue");

  // Step 0: a commuting pair is maximized by whichever element is larger.
  if (a * b == b * a) {
    AlgebraicRadius ra(a.tr(), 1);
    AlgebraicRadius rb(b.tr(), 1);
    Ordering cmp = radius_cmp(ra, rb);
    OptimalitySet opt =
        cmp == Ordering::Less    ? OptimalitySet::finite({"b"})
        : cmp == Ordering::Greater ? OptimalitySet::finite({"a"})
                                   : OptimalitySet::finite({"a", "b"});
    AlgebraicRadius radius = cmp == Ordering::Greater ? ra : rb;
    return {PairClassification{CaseLabel::Commuting, false, ""},
            make_report(std::move(opt), std::move(radius), precision)};
  }

  // Step 1: the invariant-arc pair must exist.
  std::optional<std::pair<BoundaryInterval, BoundaryInterval>> co;
  try {
    co = coherent_orientation(a, b);
  } catch (const UnsupportedFieldError&) {
    return out_of_scope("fixed points not representable in a single quadratic extension", false);
  }
  if (!co) return out_of_scope("not coherently oriented", false);

  // Step 2: order by trace. The invariant arcs do not depend on the order.
  bool swapped = a.tr().compare(b.tr()) > 0;
  if (swapped) {
    std::swap(a, b);
    std::swap(clsA, clsB);
  }
  QuadExt x = a.tr();
  QuadExt y = b.tr();

  bool parallel_type = false;
  if (clsA == ElementClass::Hyperbolic && clsB == ElementClass::Hyperbolic) {
    AxesRelation rel = axes_relation(a, b);
    // Step 3: crossing axes.
    if (rel == AxesRelation::Intersecting) {
      OptimalitySet opt = x == y ? OptimalitySet::finite({"a", "b"})
                                 : OptimalitySet::finite({"b"});
      return {PairClassification{CaseLabel::I_Intersecting, swapped, ""},
              make_report(std::move(opt), AlgebraicRadius(y, 1), precision)};
    }
    parallel_type = rel == AxesRelation::AsymptoticallyParallel;
  } else if (clsA == ElementClass::Parabolic && clsB == ElementClass::Hyperbolic) {
    parallel_type = parabolic_shares_fixed_point(a, b);
  } else if (clsB == ElementClass::Parabolic && clsA == ElementClass::Hyperbolic) {
    parallel_type = parabolic_shares_fixed_point(b, a);
  }
  // Two parabolic elements never share their fixed point here (they would
  // commute), so they fall through to the equal-trace branch.

  // Step 4: axes meeting at the boundary, or a parabolic anchored there.
  if (parallel_type) {
    if (x != y) {
      return {PairClassification{CaseLabel::II_ParallelUnequal, swapped, ""},
              make_report(OptimalitySet::finite({"b"}), AlgebraicRadius(y, 1), precision)};
    }
    switch (arc_overlap(co->first, co->second)) {
      case Overlap::Singleton:
        return {PairClassification{CaseLabel::II_Parallel_1, swapped, ""},
                make_report(OptimalitySet::finite({"a", "b"}), AlgebraicRadius(y, 1), precision)};
      case Overlap::Empty:
        return {PairClassification{CaseLabel::II_Parallel_2, swapped, ""},
                make_report(OptimalitySet::all_non_powers(),
                            AlgebraicRadius((a * b).tr(), 2), precision)};
      case Overlap::Bigger:
        throw InconsistencyError("invariant arcs overlap beyond a single point");
    }
  }

  // Step 5: equal traces with the reversed pair not coherently oriented.
  if (x == y) {
    if (!well_oriented(a, b))
      throw std::logic_error("equal-trace pair beyond the crossing and parallel cases");
    return {PairClassification{CaseLabel::III_EqualTraceWellOriented, swapped, ""},
            make_report(OptimalitySet::finite({"ab"}), AlgebraicRadius((a * b).tr(), 2),
                        precision)};
  }

  // Step 6: the remaining well-oriented pairs split by integer trace data.
  if (!all_int_entries(a) || !all_int_entries(b))
    return out_of_scope("real entries outside the integer case", swapped);
  Int ix = int_trace(x);
  Int iy = int_trace(y);
  Int iz = int_trace((a * b).tr());
  CaseLabel label = iv_branch(ix, iy, iz);
  switch (label) {
    case CaseLabel::IV_1:
      return {PairClassification{label, swapped, ""},
              make_report(OptimalitySet::finite({"b"}), AlgebraicRadius(y, 1), precision)};
    case CaseLabel::IV_2:
    case CaseLabel::IV_3b: {
      Int t_abb = iz * iy - ix;
      return {PairClassification{label, swapped, ""},
              make_report(OptimalitySet::finite({"abb"}),
                          AlgebraicRadius(QuadExt(t_abb), 3), precision)};
    }
    case CaseLabel::IV_3a:
      return {PairClassification{label, swapped, ""},
              make_report(OptimalitySet::finite({"ab"}), AlgebraicRadius(QuadExt(iz), 2),
                          precision)};
    default:
      throw std::logic_error("unreachable");
  }
}

}  // namespace sl2jsr
