#include "sl2jsr/characters.hpp"

namespace sl2jsr {

namespace {

bool perfect_nth_power(const Int& v, unsigned long n, Int* root) {
  Int r = iroot(v, n);
  Int p;
  mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), n);
  if (p != v) return false;
  if (root) *root = r;
  return true;
}

}  // namespace

Ordering radius_cmp(const AlgebraicRadius& r1, const AlgebraicRadius& r2) {
  unsigned long m = lcm_ul(r1.n, r2.n);
  QuadExt c1 = chebyshev(m / r1.n, r1.t);
  QuadExt c2 = chebyshev(m / r2.n, r2.t);
  int s = c1.compare(c2);
  if (s < 0) return Ordering::Less;
  if (s > 0) return Ordering::Greater;
  return Ordering::Equal;
}

RatInterval radius_bounds(const AlgebraicRadius& r, unsigned long bits) {
  RatInterval t_iv = quadext_bounds(r.t, bits);
  QuadExt disc = r.t * r.t - QuadExt(4);
  RatInterval disc_iv = quadext_bounds(disc, bits);
  if (sign_of(disc_iv.lo) < 0) disc_iv.lo = 0;  // disc >= 0 exactly; clamp noise
  RatInterval root_iv = iv_sqrt(disc_iv, bits);
  RatInterval rho_iv = iv_add(t_iv, root_iv);
  rho_iv.lo /= 2;
  rho_iv.hi /= 2;
  if (r.n == 1) return rho_iv;
  return iv_nthroot(rho_iv, r.n, bits);
}

std::string radius_decimal(const AlgebraicRadius& r, unsigned digits) {
  QuadExt disc = r.t * r.t - QuadExt(4);
  auto s = disc.sqrt_in_field();
  if (s.has_value()) {
    QuadExt rho = (r.t + *s) / QuadExt(2);
    if (rho.is_rational()) {
      Rat rv = rho.rational_value();
      Int rnum, rden;
      if (perfect_nth_power(rv.get_num(), r.n, &rnum) &&
          perfect_nth_power(rv.get_den(), r.n, &rden)) {
        Rat exact(rnum, rden);
        exact.canonicalize();
        return decimal_truncate_exact(exact, digits);
      }
      // rational rho, irrational n-th root: interval refinement terminates
    }
    // quadratic-irrational rho: rho^(1/n) is irrational for every n >= 1
  }
  return decimal_truncate([&](unsigned long bits) { return radius_bounds(r, bits); },
                          digits);
}

}  // namespace sl2jsr
