#pragma once

#include <string>
#include <vector>

#include "sl2jsr/classifier.hpp"
#include "sl2jsr/mat2.hpp"
#include "sl2jsr/quadext.hpp"

namespace sl2jsr {

// Exact comparison that rejected one enumerated word: both traces are lifted
// by Chebyshev polynomials to a common word length, where lifted_trace <
// lifted_max.
struct RejectionCertificate {
  std::string word;
  QuadExt trace;
  unsigned long common_multiple;
  QuadExt lifted_trace;
  QuadExt lifted_max;
};

struct OracleReport {
  // Every Lyndon word of length <= max_len attaining the maximal normalized
  // radius, in lexicographic order.
  std::vector<std::string> max_words;
  // The shared radius of the maximal words.
  AlgebraicRadius radius;
  // One entry per rejected word when requested, in lexicographic order.
  std::vector<RejectionCertificate> certificates;
};

// Exhaustive normalized-radius maximization over all Lyndon words of length
// <= max_len, evaluated with exact arithmetic. Workers only partition the
// trace computations; the reduction is sequential, so the report does not
// depend on the worker count. Throws std::invalid_argument when some word
// trace drops below 2, which identifies a pair that is not coherently
// oriented.
OracleReport brute_force_max(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B,
                             unsigned long max_len, unsigned workers = 1,
                             bool with_certificates = false);
OracleReport brute_force_max(const Mat2<Int>& A, const Mat2<Int>& B,
                             unsigned long max_len, unsigned workers = 1,
                             bool with_certificates = false);

struct VerifyResult {
  bool ok;
  bool skipped = false;
  std::string detail;
};

// Checks a claimed optimality set and radius against the brute-force
// enumeration on the given (already ordered) pair: the enumerated ties must
// equal the claimed words restricted to length <= max_len, with equal radius;
// when no claimed word is short enough, the enumerated maximum must stay
// strictly below the claimed radius.
VerifyResult verify_against(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B,
                            unsigned long max_len, const OptimalitySet& claimed,
                            const AlgebraicRadius& claimed_radius, unsigned workers = 1);

// Classifies the pair, then cross-examines the reported optimal set with
// verify_against on the trace-ordered pair. Out-of-scope and commuting pairs
// are reported as skipped.
VerifyResult verify_classification(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B,
                                   unsigned long max_len, unsigned workers = 1);

struct RandomPair {
  std::string word_a;
  std::string word_b;
  Mat2<Int> A;
  Mat2<Int> B;
};

// Deterministic seeded pair of distinct noncommuting products of the two
// unit triangular matrices, each a positive word of length <= max_factors
// (so all entries are nonnegative integers).
RandomPair random_pair(unsigned long long seed, unsigned long max_factors);

}  // namespace sl2jsr
