#include "sl2jsr/quadext.hpp"

#include <cmath>

namespace sl2jsr {

namespace {

// Sign of A + B*sqrt(m) with m >= 0 and m not assumed square-free.
int sign_two_term(const Int& A, const Int& B, const Int& m) {
  if (sign_of(m) < 0) throw ScalarError("negative radicand");
  Int root;
  if (is_perfect_square(m, &root)) {
    Int folded = A + B * root;
    return sign_of(folded);
  }
  int sa = sign_of(A);
  int sb = sign_of(B);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Int a2 = A * A;
  Int b2m = B * B * m;
  if (a2 == b2m) return 0;
  return (a2 > b2m) ? sa : sb;
}

}  // namespace

int QuadExt::sign_linear(const Int& A, const Int& B, const Int& m,
                         const Int& C, const Int& n) {
  Int a = A, b = B, c = C;
  Int mm = m, nn = n;
  Int root;
  if (sign_of(b) != 0 && is_perfect_square(mm, &root)) {
    a += b * root;
    b = 0;
  }
  if (sign_of(c) != 0 && is_perfect_square(nn, &root)) {
    a += c * root;
    c = 0;
  }
  if (sign_of(b) == 0 && sign_of(c) == 0) return sign_of(a);
  if (sign_of(c) == 0) return sign_two_term(a, b, mm);
  if (sign_of(b) == 0) return sign_two_term(a, c, nn);

  // S = B*sqrt(m) + C*sqrt(n), both parts irrational.
  int ss;
  int sb = sign_of(b);
  int sc = sign_of(c);
  if (sb == sc) {
    ss = sb;
  } else {
    Int b2m = b * b * mm;
    Int c2n = c * c * nn;
    if (b2m == c2n) {
      return sign_of(a);  // S = 0 exactly
    }
    ss = (b2m > c2n) ? sb : sc;
  }
  int sa = sign_of(a);
  if (sa == 0) return ss;
  if (sa == ss) return sa;
  // Opposite signs: sign(A + S) = sign(A) * sign(A^2 - S^2), and
  // S^2 = B^2 m + C^2 n + 2BC*sqrt(mn).
  Int u = a * a - b * b * mm - c * c * nn;
  Int v = -2 * b * c;
  return sa * sign_two_term(u, v, mm * nn);
}

QuadExt::QuadExt(Trusted, Int p, Int q, Int r, Int d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
  reduce();
}

QuadExt::QuadExt(const Int& p, const Int& q, const Int& r, const Int& d)
    : p_(p), q_(q), r_(r), d_(d) {
  if (sign_of(r_) == 0) throw ScalarError("zero denominator in quadratic value");
  if (sign_of(q_) != 0) {
    if (sign_of(d_) < 0) throw ScalarError("negative radicand in quadratic value");
    if (sign_of(d_) == 0) {
      q_ = 0;
      d_ = 1;
    } else {
      Int s, d0;
      split_square(d_, s, d0);
      q_ *= s;
      d_ = d0;
      if (d_ == 1) {
        p_ += q_;
        q_ = 0;
      }
    }
  } else {
    d_ = 1;
  }
  reduce();
}

void QuadExt::reduce() {
  if (sign_of(r_) < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (sign_of(q_) == 0) d_ = 1;
  Int g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadExt QuadExt::sqrt_of(const Int& d) {
  if (sign_of(d) < 0) throw ScalarError("sqrt of negative integer");
  if (sign_of(d) == 0) return QuadExt();
  return QuadExt(Int(0), Int(1), Int(1), d);
}

Rat QuadExt::rational_value() const {
  if (!is_rational()) throw ScalarError("irrational value where a rational was required");
  Rat v(p_);
  v /= Rat(r_);
  v.canonicalize();
  return v;
}

Int QuadExt::int_value() const {
  if (!is_int()) throw ScalarError("non-integer value where an integer was required");
  return p_;
}

int QuadExt::sign() const {
  return sign_two_term(p_, q_, d_);
}

QuadExt QuadExt::conjugate() const {
  return QuadExt(Trusted{}, p_, -q_, r_, d_);
}

Rat QuadExt::norm() const {
  Rat v(p_ * p_ - q_ * q_ * d_);
  v /= Rat(r_ * r_);
  v.canonicalize();
  return v;
}

const Int& QuadExt::common_d(const QuadExt& a, const QuadExt& b) {
  if (a.is_rational()) return b.d_;
  if (b.is_rational()) return a.d_;
  if (a.d_ == b.d_) return a.d_;
  throw ScalarError("mixing sqrt(" + to_string(a.d_) + ") with sqrt(" +
                    to_string(b.d_) + ")");
}

QuadExt QuadExt::operator-() const {
  return QuadExt(Trusted{}, -p_, -q_, r_, d_);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  Int d = common_d(*this, o);
  *this = QuadExt(Trusted{}, p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_,
                  r_ * o.r_, d);
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  Int d = common_d(*this, o);
  *this = QuadExt(Trusted{}, p_ * o.r_ - o.p_ * r_, q_ * o.r_ - o.q_ * r_,
                  r_ * o.r_, d);
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Int d = common_d(*this, o);
  *this = QuadExt(Trusted{}, p_ * o.p_ + q_ * o.q_ * d, p_ * o.q_ + q_ * o.p_,
                  r_ * o.r_, d);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw ScalarError("division by zero");
  Int d = common_d(*this, o);
  // 1/((p+q*sqrt(d))/r) = r*(p - q*sqrt(d)) / (p^2 - q^2 d).
  Int den = o.p_ * o.p_ - o.q_ * o.q_ * d;
  QuadExt inv(Trusted{}, o.r_ * o.p_, -o.r_ * o.q_, den, d);
  return *this *= inv;
}

int QuadExt::compare(const QuadExt& o) const {
  // Difference scaled by r1*r2 > 0.
  Int a = p_ * o.r_ - o.p_ * r_;
  Int b = q_ * o.r_;
  Int c = -o.q_ * r_;
  if (d_ == o.d_) return sign_two_term(a, b + c, d_);
  return sign_linear(a, b, d_, c, o.d_);
}

std::optional<QuadExt> QuadExt::sqrt_in_field() const {
  int s = sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return QuadExt();
  if (is_rational()) {
    // sqrt(p/r) = sqrt(p*r)/r.
    Int sq, d0;
    split_square(p_ * r_, sq, d0);
    if (d0 == 1) return QuadExt(Trusted{}, sq, Int(0), r_, Int(1));
    return QuadExt(Trusted{}, Int(0), sq, r_, d0);
  }
  // Want u + v*sqrt(d) with (u + v*sqrt(d))^2 = P + Q*sqrt(d),
  // P = p/r, Q = q/r. Then u^2 - v^2 d = +-sqrt(norm), so norm must be the
  // square of a rational, and u^2 = (P +- sqrt(norm))/2.
  Rat nrm = norm();
  if (sign_of(nrm) < 0) return std::nullopt;
  Int num_root, den_root;
  if (!is_perfect_square(nrm.get_num(), &num_root)) return std::nullopt;
  if (!is_perfect_square(nrm.get_den(), &den_root)) return std::nullopt;
  Rat root_norm(num_root);
  root_norm /= Rat(den_root);
  root_norm.canonicalize();
  Rat pp(p_);
  pp /= Rat(r_);
  pp.canonicalize();
  Rat qq(q_);
  qq /= Rat(r_);
  qq.canonicalize();
  for (int branch = 0; branch < 2; ++branch) {
    Rat u2 = (branch == 0) ? Rat((pp + root_norm) / 2) : Rat((pp - root_norm) / 2);
    if (sign_of(u2) <= 0) continue;  // u = 0 impossible: q != 0 forces 2uv = Q != 0
    Int un, ud;
    if (!is_perfect_square(u2.get_num(), &un)) continue;
    if (!is_perfect_square(u2.get_den(), &ud)) continue;
    Rat u(un);
    u /= Rat(ud);
    u.canonicalize();
    for (int us = 0; us < 2; ++us) {
      Rat uu = (us == 0) ? u : Rat(-u);
      Rat v = qq / (2 * uu);
      // candidate (uu + v*sqrt(d)); verify square and sign.
      QuadExt cand(uu.get_num() * v.get_den(), v.get_num() * uu.get_den(),
                   uu.get_den() * v.get_den(), d_);
      if (cand.sign() < 0) continue;
      QuadExt sqr = cand * cand;
      if (sqr.compare(*this) == 0) return cand;
    }
  }
  return std::nullopt;
}

std::string QuadExt::str() const {
  if (is_rational()) {
    if (r_ == 1) return to_string(p_);
    return to_string(p_) + "/" + to_string(r_);
  }
  std::string out = "(" + to_string(p_);
  if (sign_of(q_) >= 0) {
    out += "+" + to_string(q_);
  } else {
    Int nq = -q_;
    out += "-" + to_string(nq);
  }
  out += "*sqrt(" + to_string(d_) + "))/" + to_string(r_);
  return out;
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch != ' ' && ch != '\t' && ch != '\r' && ch != '\n') out += ch;
  }
  return out;
}

// Parses "q*sqrt(D)" or "sqrt(D)" starting at pos; q carries the sign.
bool parse_root_term(const std::string& s, size_t pos, size_t end, Int& q, Int& d) {
  size_t star = s.find("*sqrt(", pos);
  size_t root_at;
  if (star != std::string::npos && star < end) {
    q = parse_int(s.substr(pos, star - pos));
    root_at = star + 6;
  } else if (s.compare(pos, 5, "sqrt(") == 0) {
    q = 1;
    root_at = pos + 5;
  } else if (s.compare(pos, 6, "-sqrt(") == 0) {
    q = -1;
    root_at = pos + 6;
  } else {
    return false;
  }
  if (end == 0 || s[end - 1] != ')') return false;
  d = parse_int(s.substr(root_at, end - 1 - root_at));
  return true;
}

}  // namespace

QuadExt QuadExt::parse(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty scalar");
  if (s[0] == '(') {
    // "(p+q*sqrt(D))/r" with the sign of q embedded.
    size_t close = s.rfind(')');
    size_t slash = s.rfind('/');
    Int r(1);
    size_t body_end;
    if (slash != std::string::npos && slash > close) {
      r = parse_int(s.substr(slash + 1));
      body_end = slash - 1;
    } else {
      body_end = s.size() - 1;
    }
    if (s[body_end] != ')') throw ParseError("invalid scalar: '" + text + "'");
    std::string body = s.substr(1, body_end - 1);
    // Split at the sign that precedes the root term.
    size_t sq = body.find("sqrt(");
    if (sq == std::string::npos) throw ParseError("invalid scalar: '" + text + "'");
    size_t split = body.rfind('+', sq);
    size_t split_minus = body.rfind('-', sq);
    if (split == std::string::npos ||
        (split_minus != std::string::npos && split_minus > split && split_minus > 0)) {
      split = split_minus;
    }
    if (split == std::string::npos || split == 0) {
      throw ParseError("invalid scalar: '" + text + "'");
    }
    Int p = parse_int(body.substr(0, split));
    Int q, d;
    std::string tail = body.substr(split);  // keeps the sign
    if (tail[0] == '+') tail.erase(0, 1);
    if (!parse_root_term(tail, 0, tail.size(), q, d)) {
      throw ParseError("invalid scalar: '" + text + "'");
    }
    return QuadExt(p, q, r, d);
  }
  if (s.find("sqrt(") != std::string::npos) {
    // "q*sqrt(D)" or "sqrt(D)" or "-sqrt(D)".
    Int q, d;
    if (!parse_root_term(s, 0, s.size(), q, d)) {
      throw ParseError("invalid scalar: '" + text + "'");
    }
    return QuadExt(Int(0), q, Int(1), d);
  }
  return QuadExt(parse_rat(s));
}

double QuadExt::approx() const {
  double num = p_.get_d() + q_.get_d() * std::sqrt(d_.get_d());
  return num / r_.get_d();
}

std::string to_string(const QuadExt& v) { return v.str(); }

}  // namespace sl2jsr
