#include "sl2jsr/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sl2jsr/chebyshev.hpp"
#include "sl2jsr/fixtures.hpp"
#include "sl2jsr/scalars.hpp"
#include "sl2jsr/word.hpp"

namespace sl2jsr {

namespace {

std::string join_words(const std::vector<std::string>& ws) {
  std::string out = "{";
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ",";
    out += ws[i];
  }
  out += "}";
  return out;
}

}  // namespace

OracleReport brute_force_max(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B,
                             unsigned long max_len, unsigned workers,
                             bool with_certificates) {
  if (max_len == 0) throw std::invalid_argument("max_len must be positive");
  Mat2<QuadExt> a = normalize_sign(A);
  Mat2<QuadExt> b = normalize_sign(B);
  std::vector<std::string> words = lyndon_words(max_len);
  size_t n = words.size();
  std::vector<QuadExt> traces(n);

  auto fill = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) traces[i] = word_eval(words[i], a, b).tr();
  };
  size_t nworkers = std::min<size_t>(workers ? workers : 1, n);
  if (nworkers <= 1) {
    fill(0, n);
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (n + nworkers - 1) / nworkers;
    for (size_t k = 0; k < nworkers; ++k) {
      size_t lo = k * chunk;
      size_t hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(fill, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  QuadExt two(2);
  for (size_t i = 0; i < n; ++i) {
    if (traces[i].compare(two) < 0) {
      throw std::invalid_argument("trace of word \"" + words[i] + "\" is " + traces[i].str() +
                                  ", below 2: the pair is not coherently oriented");
    }
  }

  // Sequential reduction in lexicographic word order.
  size_t best = 0;
  std::vector<size_t> ties = {0};
  AlgebraicRadius best_radius(traces[0], (unsigned long)words[0].size());
  for (size_t i = 1; i < n; ++i) {
    AlgebraicRadius r(traces[i], (unsigned long)words[i].size());
    Ordering cmp = radius_cmp(r, best_radius);
    if (cmp == Ordering::Greater) {
      best = i;
      best_radius = r;
      ties = {i};
    } else if (cmp == Ordering::Equal) {
      ties.push_back(i);
    }
  }

  OracleReport report{{}, best_radius, {}};
  for (size_t i : ties) report.max_words.push_back(words[i]);

  if (with_certificates) {
    unsigned long n_best = (unsigned long)words[best].size();
    for (size_t i = 0; i < n; ++i) {
      if (std::find(ties.begin(), ties.end(), i) != ties.end()) continue;
      unsigned long n_i = (unsigned long)words[i].size();
      unsigned long m = lcm_ul(n_i, n_best);
      QuadExt lifted_i = chebyshev(m / n_i, traces[i]);
      QuadExt lifted_best = chebyshev(m / n_best, traces[best]);
      if (lifted_i.compare(lifted_best) >= 0)
        throw std::logic_error("rejected word does not test below the maximum");
      report.certificates.push_back(
          RejectionCertificate{words[i], traces[i], m, lifted_i, lifted_best});
    }
  }
  return report;
}

OracleReport brute_force_max(const Mat2<Int>& A, const Mat2<Int>& B, unsigned long max_len,
                             unsigned workers, bool with_certificates) {
  return brute_force_max(to_quadext_mat(A), to_quadext_mat(B), max_len, workers,
                         with_certificates);
}

VerifyResult verify_against(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B,
                            unsigned long max_len, const OptimalitySet& claimed,
                            const AlgebraicRadius& claimed_radius, unsigned workers) {
  std::vector<std::string> expected;
  if (claimed.kind == OptimalitySet::Kind::Finite) {
    for (const std::string& w : claimed.words)
      if (w.size() <= max_len) expected.push_back(w);
  } else {
    for (const std::string& w : lyndon_words(max_len))
      if (w.size() >= 2) expected.push_back(w);
    if (normalize_sign(A).tr() == normalize_sign(B).tr()) {
      expected.push_back("a");
      expected.push_back("b");
    }
  }
  std::sort(expected.begin(), expected.end());

  OracleReport brute = brute_force_max(A, B, max_len, workers);
  if (expected.empty()) {
    if (radius_cmp(brute.radius, claimed_radius) != Ordering::Less) {
      return {false, false,
              "all claimed words exceed max_len, yet the enumerated maximum " +
                  join_words(brute.max_words) + " does not stay strictly below the claimed radius"};
    }
    return {true, false, "claimed words all longer than max_len; enumerated maximum is strictly smaller"};
  }
  if (brute.max_words != expected) {
    return {false, false,
            "enumerated ties " + join_words(brute.max_words) + " differ from the claimed set " +
                join_words(expected)};
  }
  if (radius_cmp(brute.radius, claimed_radius) != Ordering::Equal) {
    return {false, false, "enumerated radius does not equal the claimed radius"};
  }
  return {true, false, ""};
}

VerifyResult verify_classification(const Mat2<QuadExt>& A, const Mat2<QuadExt>& B,
                                   unsigned long max_len, unsigned workers) {
  ClassifyResult cls = classify_pair(A, B);
  if (cls.cls.label == CaseLabel::OutOfScope)
    return {true, true, "skipped: out of scope (" + cls.cls.reason + ")"};
  if (cls.cls.label == CaseLabel::Commuting)
    return {true, true, "skipped: commuting pair"};
  const Mat2<QuadExt>& first = cls.cls.swapped ? B : A;
  const Mat2<QuadExt>& second = cls.cls.swapped ? A : B;
  return verify_against(first, second, max_len, cls.report->optimal, cls.report->radius,
                        workers);
}

RandomPair random_pair(unsigned long long seed, unsigned long max_factors) {
  if (max_factors < 2) throw std::invalid_argument("max_factors must be at least 2");
  std::mt19937_64 rng(seed);
  auto word = [&]() {
    unsigned long len = 1 + (unsigned long)(rng() % max_factors);
    std::string w;
    for (unsigned long i = 0; i < len; ++i) w.push_back((rng() & 1) ? 'b' : 'a');
    return w;
  };
  for (;;) {
    std::string u = word();
    std::string v = word();
    Mat2<Int> A = ln_word(u);
    Mat2<Int> B = ln_word(v);
    if (A == B) continue;
    if (A * B == B * A) continue;
    return RandomPair{u, v, A, B};
  }
}

}  // namespace sl2jsr
