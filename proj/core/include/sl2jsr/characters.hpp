#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "sl2jsr/chebyshev.hpp"
#include "sl2jsr/interval.hpp"
#include "sl2jsr/mat2.hpp"
#include "sl2jsr/quadext.hpp"
#include "sl2jsr/scalars.hpp"
#include "sl2jsr/word.hpp"

namespace sl2jsr {

enum class Ordering { Less, Equal, Greater };

inline const char* ordering_str(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "?";
}

// Evaluates trace characters [w] = tr Φ(w) for group words over {a,b,A,B}.
//
// Matrices mode multiplies out Φ(w) directly. Triple mode knows only
// x = [a], y = [b], z = [ab]: it tracks Φ(w) by its coordinates in the
// module basis {1, Φ(a), Φ(b), Φ(ab)}. Right multiplication by a generator
// acts linearly on those coordinates (Cayley-Hamilton in degree 2 plus its
// polarization ΦaΦb + ΦbΦa = xΦb + yΦa + (z − xy)), and inverses expand as
// Φa⁻¹ = x − Φa, Φb⁻¹ = y − Φb, so one left-to-right pass computes any
// trace in O(|w|) exact ring operations. Values are memoized per canonical
// word class.
template <class S>
class CharContext {
 public:
  static CharContext matrices(Mat2<S> A, Mat2<S> B) {
    CharContext ctx;
    ctx.matrices_ = true;
    ctx.A_ = std::move(A);
    ctx.B_ = std::move(B);
    return ctx;
  }

  static CharContext triple(S x, S y, S z) {
    CharContext ctx;
    ctx.matrices_ = false;
    ctx.x_ = std::move(x);
    ctx.y_ = std::move(y);
    ctx.z_ = std::move(z);
    return ctx;
  }

  bool matrices_mode() const { return matrices_; }

  // [w]; the empty word gives 2. Total on freely reduced and unreduced input.
  S char_of(const std::string& w) {
    if (!w.empty()) require_group_word(w);
    std::string r = cyclic_reduce(w);
    if (matrices_) {
      return word_eval(r, A_, B_).tr();
    }
    return eval(r);
  }

 private:
  CharContext() : x_(0), y_(0), z_(0) {}

  S eval(const std::string& w) {
    std::string r = cyclic_reduce(w);
    if (r.empty()) return S(2);
    std::string key = canonical_trace_key(r);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    S value = compute(key);
    memo_.emplace(key, value);
    return value;
  }

  S base_letter(char c) const {
    return (c == 'a' || c == 'A') ? x_ : y_;
  }

  // key is nonempty, freely and cyclically reduced.
  S compute(const std::string& key) {
    std::size_t n = key.size();

    bool all_same = true;
    for (char c : key) all_same = all_same && (c == key[0]);
    if (all_same) return chebyshev(n, base_letter(key[0]));

    if (n % 2 == 0) {
      bool alt_pos = true, alt_inv = true;
      for (std::size_t i = 0; i < n; ++i) {
        alt_pos = alt_pos && key[i] == (i % 2 ? 'b' : 'a');
        alt_inv = alt_inv && key[i] == (i % 2 ? 'B' : 'A');
      }
      // [(ab)^k] and its group inverse share the trace
      if (alt_pos || alt_inv) return chebyshev(n / 2, z_);
    }

    return walk(key);
  }

  // One pass over w maintaining the coordinates (al, be, ga, de) of Φ(prefix)
  // in the basis {1, Φa, Φb, Φab}; the final trace is 2·al + x·be + y·ga +
  // z·de. The per-letter maps come from the degree-2 Cayley-Hamilton
  // relations Φa² = xΦa − 1, Φb² = yΦb − 1, ΦbΦa = xΦb + yΦa + (z − xy) −
  // ΦaΦb, and Φa⁻¹ = x − Φa, Φb⁻¹ = y − Φb.
  S walk(const std::string& w) const {
    S al(1), be(0), ga(0), de(0);
    const S zxy = z_ - x_ * y_;
    for (char ch : w) {
      S i2, a2, b2, ab2;
      switch (ch) {
        case 'a':
          i2 = ga * zxy - be - de * y_;
          a2 = al + be * x_ + ga * y_ + de * z_;
          b2 = ga * x_ + de;
          ab2 = S(0) - ga;
          break;
        case 'b':
          i2 = S(0) - ga;
          a2 = S(0) - de;
          b2 = al + ga * y_;
          ab2 = be + de * y_;
          break;
        case 'A':
          i2 = al * x_ + be - ga * zxy + de * y_;
          a2 = S(0) - al - ga * y_ - de * z_;
          b2 = S(0) - de;
          ab2 = ga + de * x_;
          break;
        default:  // 'B'
          i2 = al * y_ + ga;
          a2 = be * y_ + de;
          b2 = S(0) - al;
          ab2 = S(0) - be;
          break;
      }
      al = std::move(i2);
      be = std::move(a2);
      ga = std::move(b2);
      de = std::move(ab2);
    }
    return al * S(2) + be * x_ + ga * y_ + de * z_;
  }

  bool matrices_ = false;
  Mat2<S> A_, B_;
  S x_, y_, z_;
  std::map<std::string, S> memo_;
};

// ρ^{1/n} with ρ = t/2 + sqrt((t/2)² − 1): the per-letter growth rate of a
// length-n word whose matrix has trace t >= 2. Ordered exactly.
struct AlgebraicRadius {
  QuadExt t;
  unsigned long n;

  AlgebraicRadius(QuadExt t_, unsigned long n_) : t(std::move(t_)), n(n_) {
    if (n == 0) throw std::domain_error("radius: word length must be positive");
    if (t.compare(QuadExt(2)) < 0) {
      throw std::domain_error("radius: trace below 2 (elliptic)");
    }
  }
};

// Exact order of ρ1^{1/n1} vs ρ2^{1/n2}: with m = lcm(n1, n2) both sides are
// monotone images of the traces of the m-th powers, compared exactly.
Ordering radius_cmp(const AlgebraicRadius& r1, const AlgebraicRadius& r2);

// Shrinking rational enclosure of ρ^{1/n}.
RatInterval radius_bounds(const AlgebraicRadius& r, unsigned long bits);

// Decimal expansion of ρ^{1/n}, truncated toward zero to `digits` digits.
std::string radius_decimal(const AlgebraicRadius& r, unsigned digits);

}  // namespace sl2jsr
