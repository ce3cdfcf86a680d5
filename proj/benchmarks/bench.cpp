#include <benchmark/benchmark.h>

#include "escher/arith.hpp"
#include "escher/hyper.hpp"
#include "escher/laws.hpp"
#include "escher/plot.hpp"
#include "escher/rank0.hpp"

using namespace escher;

namespace {

void BM_PseudoCmpRational(benchmark::State& state) {
  CxE a(ExactScalar(Rational(7, 3)), ExactScalar(Rational(1, 4)));
  CxE b(ExactScalar(Rational(-5, 2)), ExactScalar(Rational(7, 4)));
  for (auto _ : state) benchmark::DoNotOptimize(pseudo_cmp(a, b));
}
BENCHMARK(BM_PseudoCmpRational);

void BM_PseudoCmpSymbolic(benchmark::State& state) {
  // Real parts differ by a polynomial in PE2, exercising the enclosure path.
  CxE a(ExactScalar::pe2(), ExactScalar(0));
  CxE b(ExactScalar(Rational(7292706, 100000)), ExactScalar(1));
  for (auto _ : state) benchmark::DoNotOptimize(pseudo_cmp(a, b));
}
BENCHMARK(BM_PseudoCmpSymbolic);

void BM_Kis(benchmark::State& state) {
  CxE a(ExactScalar(Rational(7, 3)), ExactScalar(1));
  CxE b(ExactScalar(Rational(7, 3)), ExactScalar(0));
  for (auto _ : state) benchmark::DoNotOptimize(kis(a, b));
}
BENCHMARK(BM_Kis);

void BM_SikRoundTrip(benchmark::State& state) {
  CxE z(ExactScalar(Rational(11, 4)), ExactScalar(1));
  CxE x(ExactScalar(Rational(-3, 2)), ExactScalar(0));
  for (auto _ : state) benchmark::DoNotOptimize(kis(x, sik(z, x)));
}
BENCHMARK(BM_SikRoundTrip);

void BM_StigmaMul(benchmark::State& state) {
  CxE a = stigma(CxE(Rational(5, 3)));
  CxE b = stigma(CxE(Rational(-7, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_StigmaMul);

void BM_Ackermann3(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ackermann(3, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Ackermann3)->Arg(5)->Arg(10)->Arg(14);

void BM_HyperTetration(benchmark::State& state) {
  Numeric two(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(hyper_apply(HyperRank(4), two, Numeric(4)));
}
BENCHMARK(BM_HyperTetration);

void BM_LawFuzz(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(laws::fuzz_law("17.3", 10, 99));
}
BENCHMARK(BM_LawFuzz);

void BM_PlotRender(benchmark::State& state) {
  plot::PlotSpec spec;
  spec.center = CxE(0);
  spec.window = Window{Rational(-3), Rational(3), Rational(0), Rational(2)};
  spec.width = static_cast<unsigned>(state.range(0));
  spec.height = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plot::render_ppm(spec));
}
BENCHMARK(BM_PlotRender)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
