#include <benchmark/benchmark.h>

#include "sl2jsr/characters.hpp"
#include "sl2jsr/chebyshev.hpp"
#include "sl2jsr/classifier.hpp"
#include "sl2jsr/interval.hpp"
#include "sl2jsr/mat2.hpp"
#include "sl2jsr/oracle.hpp"
#include "sl2jsr/quadext.hpp"
#include "sl2jsr/word.hpp"

using namespace sl2jsr;

static void BM_QuadExtMul(benchmark::State& state) {
  QuadExt a(Int(17), Int(-2), Int(10), Int(6));
  QuadExt b(Int(8), Int(2), Int(10), Int(6));
  for (auto _ : state) {
    QuadExt c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_QuadExtMul);

static void BM_QuadExtCompare(benchmark::State& state) {
  QuadExt a(Int(4850), Int(1), Int(2), Int(6));
  QuadExt b(Int(4851), Int(-1), Int(2), Int(6));
  for (auto _ : state) {
    int c = a.compare(b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_QuadExtCompare);

static void BM_TracePolynomialValue(benchmark::State& state) {
  Rat t(7, 3);
  unsigned long k = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    Rat v = chebyshev(k, t);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_TracePolynomialValue)->Arg(64)->Arg(4096);

static void BM_SqrtBounds(benchmark::State& state) {
  Rat v(925, 7);
  for (auto _ : state) {
    RatInterval iv = sqrt_bounds(v, 256);
    benchmark::DoNotOptimize(iv);
  }
}
BENCHMARK(BM_SqrtBounds);

static void BM_CharOfWord(benchmark::State& state) {
  auto ctx = CharContext<Int>::triple(Int(2), Int(3), Int(4));
  std::string w = word_pow("aabab", static_cast<unsigned long>(state.range(0)) / 5);
  for (auto _ : state) {
    Int v = ctx.char_of(w);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_CharOfWord)->Arg(10)->Arg(40)->Arg(160);

static void BM_LyndonWords(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto words = lyndon_words(n);
    benchmark::DoNotOptimize(words);
  }
}
BENCHMARK(BM_LyndonWords)->Arg(10)->Arg(14);

static void BM_BruteForceMax(benchmark::State& state) {
  Mat2<Int> L{Int(1), Int(0), Int(1), Int(1)};
  Mat2<Int> N{Int(1), Int(1), Int(0), Int(1)};
  auto max_len = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    OracleReport rep = brute_force_max(L, N, max_len);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_BruteForceMax)->Arg(8)->Arg(10);

static void BM_RadiusCompareTie(benchmark::State& state) {
  // rho(3) equals rho(7)^(1/2) exactly; equality is the slowest path.
  AlgebraicRadius r1{QuadExt(3), 1};
  AlgebraicRadius r2{QuadExt(7), 2};
  for (auto _ : state) {
    Ordering o = radius_cmp(r1, r2);
    benchmark::DoNotOptimize(o);
  }
}
BENCHMARK(BM_RadiusCompareTie);

static void BM_ClassifyPair(benchmark::State& state) {
  Mat2<QuadExt> L{QuadExt(1), QuadExt(0), QuadExt(1), QuadExt(1)};
  Mat2<QuadExt> N{QuadExt(1), QuadExt(1), QuadExt(0), QuadExt(1)};
  Mat2<QuadExt> A = word_eval("aaab", L, N);
  Mat2<QuadExt> B = word_eval("bbabb", L, N);
  for (auto _ : state) {
    ClassifyResult res = classify_pair(A, B);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_ClassifyPair);

BENCHMARK_MAIN();
