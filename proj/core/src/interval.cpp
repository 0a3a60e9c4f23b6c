#include "sl2jsr/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2jsr {

namespace {

Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int pow10(unsigned digits) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return p;
}

// floor/ceil of num/den for den > 0
Int fdiv(const Int& num, const Int& den) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int cdiv(const Int& num, const Int& den) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// v * scale truncated toward zero, as an integer.
Int scaled_trunc(const Rat& v, const Int& scale) {
  Rat q = v * Rat(scale);
  Int t;
  mpz_tdiv_q(t.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return t;
}

std::string format_scaled(const Int& t, unsigned digits) {
  Int p10 = pow10(digits);
  bool neg = t < 0;
  Int a = neg ? Int(-t) : t;
  Int ip = a / p10;
  Int fp = a % p10;
  std::string out = neg ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    out += ".";
    out += std::string(digits - frac.size(), '0');
    out += frac;
  }
  return out;
}

}  // namespace

RatInterval iv_point(const Rat& v) { return {v, v}; }

RatInterval iv_add(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval iv_sub(const RatInterval& a, const RatInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval iv_neg(const RatInterval& a) { return {-a.hi, -a.lo}; }

RatInterval sqrt_bounds(const Rat& v, unsigned long bits) {
  int s = sign_of(v);
  if (s < 0) throw std::domain_error("sqrt_bounds: negative argument");
  if (s == 0) return iv_point(Rat(0));
  Int a = v.get_num();
  Int b = v.get_den();
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  // sqrt(a/b) = sqrt(a*b)/b; m <= scale*sqrt(a*b) < m+1
  Int m = isqrt(a * b * scale * scale);
  return {make_rat(m, scale * b), make_rat(m + 1, scale * b)};
}

RatInterval nthroot_bounds(const Rat& v, unsigned long n, unsigned long bits) {
  if (n == 0) throw std::domain_error("nthroot_bounds: zeroth root");
  int s = sign_of(v);
  if (s < 0) throw std::domain_error("nthroot_bounds: negative argument");
  if (s == 0) return iv_point(Rat(0));
  if (n == 1) return iv_point(v);
  Int a = v.get_num();
  Int b = v.get_den();
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Int sn;
  mpz_pow_ui(sn.get_mpz_t(), scale.get_mpz_t(), n);
  Int num = a * sn;
  Int m1 = iroot(fdiv(num, b), n);       // m1 <= scale * v^(1/n)
  Int m2 = iroot(cdiv(num, b), n) + 1;   // m2 >  scale * v^(1/n)
  return {make_rat(m1, scale), make_rat(m2, scale)};
}

RatInterval iv_sqrt(const RatInterval& a, unsigned long bits) {
  return {sqrt_bounds(a.lo, bits).lo, sqrt_bounds(a.hi, bits).hi};
}

RatInterval iv_nthroot(const RatInterval& a, unsigned long n, unsigned long bits) {
  return {nthroot_bounds(a.lo, n, bits).lo, nthroot_bounds(a.hi, n, bits).hi};
}

RatInterval quadext_bounds(const QuadExt& v, unsigned long bits) {
  if (v.is_rational()) return iv_point(v.rational_value());
  RatInterval root = sqrt_bounds(Rat(v.d()), bits);
  Rat base = make_rat(v.p(), v.r());
  Rat coef = make_rat(v.q(), v.r());
  if (sign_of(coef) >= 0) return {base + coef * root.lo, base + coef * root.hi};
  return {base + coef * root.hi, base + coef * root.lo};
}

std::string decimal_truncate_exact(const Rat& v, unsigned digits) {
  return format_scaled(scaled_trunc(v, pow10(digits)), digits);
}

std::string decimal_truncate(const std::function<RatInterval(unsigned long)>& approx,
                             unsigned digits) {
  Int p10 = pow10(digits);
  for (unsigned long bits = 64; bits <= (1ul << 22); bits *= 2) {
    RatInterval iv = approx(bits);
    Int tlo = scaled_trunc(iv.lo, p10);
    Int thi = scaled_trunc(iv.hi, p10);
    if (tlo == thi) return format_scaled(tlo, digits);
  }
  throw std::runtime_error("decimal_truncate: enclosure refinement did not converge");
}

std::pair<Rat, Rat> isolate_root(const Poly<Rat>& p, const Rat& lo, const Rat& hi,
                                 const Rat& width) {
  if (!(lo < hi)) throw std::invalid_argument("isolate_root: empty bracket");
  if (!(sign_of(width) > 0)) throw std::invalid_argument("isolate_root: width must be positive");
  Rat flo = p.eval(lo);
  Rat fhi = p.eval(hi);
  int slo = sign_of(flo);
  int shi = sign_of(fhi);
  if (slo == 0) return {lo, lo};
  if (shi == 0) return {hi, hi};
  if (slo == shi) throw std::invalid_argument("isolate_root: equal signs at both endpoints");
  Rat a = lo, b = hi;
  while (b - a > width) {
    Rat mid = (a + b) / 2;
    int sm = sign_of(p.eval(mid));
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return {a, b};
}

QuadExt eval_at(const Poly<Rat>& p, const QuadExt& x) {
  QuadExt acc(0);
  const auto& cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + QuadExt(cs[i]);
  return acc;
}

}  // namespace sl2jsr
