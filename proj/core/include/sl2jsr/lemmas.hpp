#pragma once

#include <string>
#include <vector>

namespace sl2jsr {

// Outcome of one named trace-inequality check across many instances.
struct LemmaCheck {
  std::string name;
  unsigned long passed = 0;
  unsigned long failed = 0;
  // Instance data for the first failure; empty while the check is clean.
  std::string first_counterexample;
};

struct LemmaReport {
  unsigned long trials = 0;
  std::vector<LemmaCheck> checks;

  bool all_passed() const;
  // nullptr when no check carries that name.
  const LemmaCheck* find(const std::string& name) const;
  std::string str() const;
};

// Exhaustive witness search on a cyclic integer sequence: f has even size
// 2s >= 4, indices mod 2s, and some x must satisfy both f(x) >= f(x+2) and
// f(x+1) <= f(x+3). Returns whether such x exists.
bool circle_has_witness(const std::vector<long>& f);

// Property suite over exact trace inequalities of integer pairs. Every check
// runs once per trial: on the seeded random pair when it satisfies the
// check's hypotheses (decided by exact classification), otherwise on the
// next pair from a precomputed catalog of qualifying pairs. Violations are
// recorded in the report, never thrown.
//
// The checks, with x = [a], y = [b] and words written multiplicatively:
//   subword-trace-drop          deleting letters strictly lowers the trace
//                               (except powers of a parabolic letter)
//   circle-function-witness     the cyclic-sequence witness above, on random f
//   ab-power-vs-pure-power      [ab] < [b^2] forces [ab^k] < [b^(k+1)]
//   maximizers-avoid-aa         fixed-length trace maximizers have no cyclic
//                               factor aa when x < y
//   a-insertions-vs-pure-power  [ab] < [b^2] forces
//                               [ab^(k1)...ab^(ks)] < [b^(k1+...+ks+s)]
//   syllable-balance-ab-ab3     [w·ab·(ab^2)^s·ab^3] < [w·ab^2·(ab^2)^s·ab^2],
//                               and the mirrored form for w starting with a
//   syllable-balance-ab-ab4     [w·ab·(ab^2)^s·ab^4] < [w·ab^2·(ab^2)^s·ab^3],
//                               and the mirrored form
//   three-ab-syllables-collapse [ab^2·w·ab·(ab^2)^k·ab·(ab^2)^h·ab]
//                               < [ab^2·w·(ab^2)^(k+h+2)]
//   syllable-balance-ab4-ab3    [w·ab^4·(ab^2)^s·ab^3] < [w·(ab^2)^(s+3)],
//                               and the mirrored form
//   three-ab4-syllables-collapse [w·ab^4·(ab^2)^k·ab^4·(ab^2)^h·ab^4]
//                               < [w·(ab^2)^(k+h+5)]
//   three-ab3-syllables-collapse [w·ab^3·(ab^2)^k·ab^3·(ab^2)^h·ab^3]
//                               < [w·(ab^2)^(k+h+4)]
//   cube-square-trace-gap       |[(ab)^3] - [(ab^2)^2]| >= 2 when [ab] > [b^2]
//   ab-run-dominates            [w·ab^2·(ab)^k·ab^2] < [w·(ab)^(k+3)] when
//                               [(ab^2)^2] <= [(ab)^3] - 2
//   abb-run-dominates           [ab^2·w·ab·(ab^2)^k·ab·(ab^2)^h·ab]
//                               < [ab^2·w·(ab^2)^(k+h+2)] when
//                               [(ab)^3] <= [(ab^2)^2] - 2
//   near-tie-trace-formulas     [(ab^2)^2] >= [(ab)^3] + 2 forces
//                               [ab] = [b^2]+1, 2[a] <= [b], and
//                               [ab]^3 <= [(ab^2)^2] + [ab]
//   maximizers-isolate-b        for equal traces, trace maximizers among
//                               words with na >= nb occurrences keep every b
//                               between two a's (cyclically); exhaustive for
//                               na + nb <= 8
LemmaReport lemma_suite(unsigned long long seed, unsigned long trials);

}  // namespace sl2jsr
