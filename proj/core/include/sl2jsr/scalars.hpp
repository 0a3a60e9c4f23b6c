#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sl2jsr {

using Int = mpz_class;
using Rat = mpq_class;

// Malformed text input.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic outside the supported domain (division by zero, mixing two
// distinct irrational square roots, negative radicands, ...).
struct ScalarError : std::runtime_error {
  explicit ScalarError(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sign_of(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

// Tolerates non-canonical input such as Rat(8, 2).
inline bool is_integer(const Rat& v) {
  Rat c(v);
  c.canonicalize();
  return c.get_den() == 1;
}

// floor(sqrt(v)); requires v >= 0.
Int isqrt(const Int& v);

// floor(v^(1/n)); requires v >= 0, n >= 1.
Int iroot(const Int& v, unsigned long n);

bool is_perfect_square(const Int& v, Int* root = nullptr);

// Splits v > 0 as v = s^2 * d. d is square-free whenever every squared prime
// of v is below the trial-division bound or the leftover cofactor is itself a
// perfect square; comparison correctness elsewhere never depends on d being
// fully square-free, only value preservation matters.
void split_square(const Int& v, Int& s, Int& d);

// floor(v) toward minus infinity.
Int rat_floor(const Rat& v);

Int parse_int(const std::string& text);
// Accepts "p" or "p/q"; result canonical (lowest terms, positive denominator).
Rat parse_rat(const std::string& text);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

unsigned long lcm_ul(unsigned long a, unsigned long b);

}  // namespace sl2jsr
