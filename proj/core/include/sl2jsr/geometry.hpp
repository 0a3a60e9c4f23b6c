#pragma once

#include <optional>
#include <string>
#include <utility>

#include "sl2jsr/characters.hpp"
#include "sl2jsr/mat2.hpp"
#include "sl2jsr/quadext.hpp"

namespace sl2jsr {

// Fixed-point coordinates would need nested radicals beyond one square root.
struct UnsupportedFieldError : ScalarError {
  using ScalarError::ScalarError;
};

enum class ElementClass { Identity, Elliptic, Parabolic, Hyperbolic };
enum class AxesRelation { Intersecting, AsymptoticallyParallel, Ultraparallel };

const char* element_class_str(ElementClass c);
const char* axes_relation_str(AxesRelation r);

// A point of the boundary circle: a quadratic-irrational real number or ∞.
class BoundaryPoint {
 public:
  static BoundaryPoint infinity() { return BoundaryPoint(true, QuadExt()); }
  static BoundaryPoint finite(QuadExt v) { return BoundaryPoint(false, std::move(v)); }

  bool is_infinity() const { return inf_; }
  const QuadExt& value() const;

  friend bool operator==(const BoundaryPoint& p, const BoundaryPoint& q) {
    if (p.inf_ || q.inf_) return p.inf_ && q.inf_;
    return p.v_ == q.v_;
  }
  friend bool operator!=(const BoundaryPoint& p, const BoundaryPoint& q) {
    return !(p == q);
  }

  std::string str() const { return inf_ ? "inf" : v_.str(); }

 private:
  BoundaryPoint(bool inf, QuadExt v) : inf_(inf), v_(std::move(v)) {}
  bool inf_;
  QuadExt v_;
};

// Closed arc traversed counterclockwise from `from` to `to`; a singleton when
// the endpoints coincide.
struct BoundaryInterval {
  BoundaryPoint from;
  BoundaryPoint to;

  bool is_singleton() const { return from == to; }
  std::string str() const { return "[" + from.str() + "," + to.str() + "]"; }
};

// Strict counterclockwise order: traveling ccw from a, the point b appears
// before c. Counterclockwise means increasing reals, wrapping through ∞.
// Throws std::invalid_argument unless a, b, c are pairwise distinct.
bool betweenness(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c);

// Whether the closed ccw arc [from, to] contains p (endpoints included).
bool arc_contains(const BoundaryInterval& arc, const BoundaryPoint& p);

// Möbius action of M (det 1) on the boundary.
BoundaryPoint moebius_apply(const Mat2<QuadExt>& M, const BoundaryPoint& p);

// Identity iff M = ±Id; otherwise by |tr| against 2, decided exactly.
ElementClass classify_element(const Mat2<QuadExt>& M);

// (attracting, repelling) fixed points; equal for parabolic M. Requires M
// nonelliptic and not ±Id. Throws UnsupportedFieldError when the coordinates
// do not lie in a single quadratic extension.
std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const Mat2<QuadExt>& M);

// The pair of closed arcs (I⁺, I⁻) bounded by the attracting respectively
// repelling fixed points and invariant under both A and B respectively both
// inverses; nullopt when no such pair of arcs exists. Requires a noncommuting
// pair with traces >= 2 after sign normalization.
std::optional<std::pair<BoundaryInterval, BoundaryInterval>> coherent_orientation(
    const Mat2<QuadExt>& A, const Mat2<QuadExt>& B);

// coherent_orientation(A, B) exists while coherent_orientation(A, B⁻¹) fails.
bool well_oriented(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B);

// Relation of the translation axes of two hyperbolic elements: share one
// endpoint, strictly interleave, or neither.
AxesRelation axes_relation(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B);

// Exact order of ρ(AB) against ρ(A)·ρ(B) for hyperbolic A, B whose product
// has trace >= 2 after sign normalization.
Ordering trichotomy_check(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B);

}  // namespace sl2jsr
