#include "sl2jsr/scalars.hpp"

#include <numeric>

namespace sl2jsr {

Int isqrt(const Int& v) {
  if (sign_of(v) < 0) throw ScalarError("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

Int iroot(const Int& v, unsigned long n) {
  if (sign_of(v) < 0) throw ScalarError("iroot of negative value");
  if (n == 0) throw ScalarError("iroot with zero index");
  Int r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), n);
  return r;
}

bool is_perfect_square(const Int& v, Int* root) {
  if (sign_of(v) < 0) return false;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
  if (root != nullptr) *root = isqrt(v);
  return true;
}

void split_square(const Int& v, Int& s, Int& d) {
  if (sign_of(v) <= 0) throw ScalarError("split_square needs a positive value");
  constexpr unsigned long kTrialBound = 65536;
  s = 1;
  d = 1;
  Int rem = v;
  for (unsigned long p = 2; p <= kTrialBound; p = (p == 2 ? 3 : p + 2)) {
    Int pz(static_cast<long>(p));
    if (pz * pz > rem) break;
    if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      rem /= pz;
      ++e;
    }
    for (unsigned long i = 0; i < e / 2; ++i) s *= pz;
    if (e % 2 == 1) d *= pz;
  }
  if (rem != 1) {
    Int r;
    if (is_perfect_square(rem, &r)) {
      s *= r;
    } else {
      d *= rem;
    }
  }
}

Int rat_floor(const Rat& v) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return q;
}

namespace {

std::string trimmed(const std::string& text) {
  size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = text.find_last_not_of(" \t\r\n");
  return text.substr(b, e - b + 1);
}

bool valid_decimal_digits(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Int parse_int(const std::string& text) {
  std::string t = trimmed(text);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (!valid_decimal_digits(t)) throw ParseError("invalid integer: '" + text + "'");
  return Int(t, 10);
}

Rat parse_rat(const std::string& text) {
  std::string t = trimmed(text);
  size_t slash = t.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int(t));
  }
  Int num = parse_int(t.substr(0, slash));
  Int den = parse_int(t.substr(slash + 1));
  if (sign_of(den) == 0) throw ParseError("zero denominator: '" + text + "'");
  Rat r(num);
  r /= Rat(den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  Rat c(v);
  c.canonicalize();
  return c.get_str();
}

unsigned long lcm_ul(unsigned long a, unsigned long b) {
  return std::lcm(a, b);
}

}  // namespace sl2jsr
