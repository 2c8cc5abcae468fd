// Serial reference against the OpenMP kernels on the three hot loops.
#include <benchmark/benchmark.h>

#include "wittjet/axioms.hpp"
#include "wittjet/jet.hpp"
#include "wittjet/suites.hpp"

using namespace wittjet;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void hom_enumeration(benchmark::State& state) {
  auto z2 = named_triple("Z2");
  const auto table = build_witt_table(z2, 2);
  const auto family = p_polynomials(z2, 2);
  const auto a = Presentation::parse(z2, {"x", "y"}, {"x*y"}, "A");
  const auto b = FiniteAlgebra::over(named_finite_ring("F2eps"), z2);
  AdjunctionOptions options;
  options.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_adjunction(a, 2, b, table, family, nullptr, options));
}

void ring_axioms(benchmark::State& state) {
  auto z2 = named_triple("Z2");
  const auto b = FiniteAlgebra::over(named_finite_ring("F4"), z2);
  const WittRing<FiniteAlgebra> w(b, build_witt_table(z2, 1), 1);
  const auto elements = all_vectors(b, 2);
  auto show = [&](const std::vector<FiniteAlgebra::Element>& x) { return show_witt(b, x); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_ring_axioms<WittRing<FiniteAlgebra>>(w, elements, show, 0, 1, mode(state)));
  }
}

void poly_product(benchmark::State& state) {
  auto z2 = named_triple("Z2");
  const auto table = build_witt_table(z2, 3);
  const MultiPoly& a = table->product[3];
  const MultiPoly& b = table->sum[3];
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) ? multiply_parallel(a, b) : multiply_serial(a, b));
  }
}

}  // namespace

BENCHMARK(hom_enumeration)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(ring_axioms)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(poly_product)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
