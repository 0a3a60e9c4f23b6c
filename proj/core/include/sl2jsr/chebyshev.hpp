#pragma once

#include <utility>

namespace sl2jsr {

// Trace polynomials T_k defined by T_0 = 2, T_1 = t, T_k = t*T_{k-1} - T_{k-2}.
// They satisfy T_k(tr M) = tr(M^k) for M of determinant 1, and the doubling
// rules T_{2j} = T_j^2 - 2, T_{2j+1} = T_j * T_{j+1} - t.
//
// chebyshev_pair(k, t) returns {T_k(t), T_{k+1}(t)} in O(log k) ring operations.
template <class S>
std::pair<S, S> chebyshev_pair(unsigned long k, const S& t) {
  if (k == 0) return {S(2), t};
  auto half = chebyshev_pair(k / 2, t);
  const S& a = half.first;   // T_j
  const S& b = half.second;  // T_{j+1}
  if (k % 2 == 0) return {a * a - S(2), a * b - t};
  return {a * b - t, b * b - S(2)};
}

template <class S>
S chebyshev(unsigned long k, const S& t) {
  return chebyshev_pair(k, t).first;
}

}  // namespace sl2jsr
