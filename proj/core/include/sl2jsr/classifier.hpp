#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2jsr/characters.hpp"
#include "sl2jsr/geometry.hpp"
#include "sl2jsr/mat2.hpp"

namespace sl2jsr {

// Exact trace data contradicting an identity that every genuine input pair
// satisfies; signals corrupted input or an internal defect, never a bug in
// the caller's usage.
struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CaseLabel {
  Commuting,
  I_Intersecting,
  II_Parallel_1,
  II_Parallel_2,
  II_ParallelUnequal,
  III_EqualTraceWellOriented,
  IV_1,
  IV_2,
  IV_3a,
  IV_3b,
  OutOfScope,
};

const char* case_label_str(CaseLabel label);

struct PairClassification {
  CaseLabel label;
  // Whether the pair was exchanged so the first element has the smaller trace.
  bool swapped = false;
  // Populated only for OutOfScope.
  std::string reason;
};

// The complete set of words maximizing the normalized radius: either an
// explicit sorted list of Lyndon words or every word that is not a proper
// power.
struct OptimalitySet {
  enum class Kind { Finite, AllNonPowers };
  Kind kind = Kind::Finite;
  std::vector<std::string> words;  // nonempty, sorted, Lyndon; empty for AllNonPowers

  static OptimalitySet finite(std::vector<std::string> ws) {
    return {Kind::Finite, std::move(ws)};
  }
  static OptimalitySet all_non_powers() { return {Kind::AllNonPowers, {}}; }

  // The word whose radius the enclosing report carries.
  std::string representative() const {
    return kind == Kind::AllNonPowers ? "ab" : words.front();
  }
};

struct JsrReport {
  OptimalitySet optimal;
  AlgebraicRadius radius;
  std::string float_approx;
};

struct ClassifyResult {
  PairClassification cls;
  std::optional<JsrReport> report;  // absent exactly for OutOfScope
};

// Decides which words maximize the normalized spectral radius over all
// positive products of the pair, together with the joint spectral radius.
// Requires determinant 1 and nonelliptic elements; elements may be exchanged
// internally so the reported words refer to the smaller-trace element as a.
// Out-of-scope pairs yield a classification with a reason and no report.
ClassifyResult classify_pair(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B,
                             unsigned long precision = 15);

// The subcase decision for coherently ordered integer traces 2 <= trA < trB
// with trAB > trB² - 2 ruled in or out: compares tr(AB) with tr(B²), then
// tr((AB)³) with tr((AB²)²). The last two never tie, and a near-tie (gap
// below 2) cannot come from an actual matrix pair, so it raises
// InconsistencyError.
CaseLabel iv_branch(const Int& trA, const Int& trB, const Int& trAB);

}  // namespace sl2jsr
