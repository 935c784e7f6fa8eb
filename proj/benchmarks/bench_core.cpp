#include <benchmark/benchmark.h>

#include "stratkit/corpus.hpp"
#include "stratkit/ideal.hpp"
#include "stratkit/map_analysis.hpp"
#include "stratkit/mapfile.hpp"
#include "stratkit/matrix.hpp"
#include "stratkit/thom.hpp"

namespace {

using namespace stratkit;

PolyMap example_map() {
  return parse_map("vars: x1 x2 x3\nmap:\nx1^3 - x1*x2*x3\nx2*x3\nx3*x1\n");
}

void BM_PolyMul(benchmark::State& state) {
  Ctx ctx = make_context({"x", "y", "z"});
  Polynomial a = parse_polynomial("x^3 + 2*x*y - z^2 + 5*y*z - 1/2*x", ctx);
  Polynomial b = parse_polynomial("y^3 - 3*x*z + z^2 - 7*x*y*z + 2", ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_PolyMul);

void BM_JacobianDeterminant(benchmark::State& state) {
  PolyMap F = example_map();
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobian(F).determinant());
  }
}
BENCHMARK(BM_JacobianDeterminant);

void BM_GroebnerTwistedCubicLex(benchmark::State& state) {
  Ctx lex = make_context({"x", "y", "z"}, MonomialOrder::lex());
  std::vector<Polynomial> gens = {parse_polynomial("x^2 - y", lex),
                                  parse_polynomial("x^3 - z", lex)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(lex, gens, lex->order()));
  }
}
BENCHMARK(BM_GroebnerTwistedCubicLex);

void BM_AsymptoticSet(benchmark::State& state) {
  PolyMap F = example_map();
  for (auto _ : state) {
    benchmark::DoNotOptimize(asymptotic_set(F));
  }
}
BENCHMARK(BM_AsymptoticSet);

void BM_ThomPartition(benchmark::State& state) {
  PolyMap F = example_map();
  for (auto _ : state) {
    benchmark::DoNotOptimize(thom_partition(F));
  }
}
BENCHMARK(BM_ThomPartition);

void BM_StratifyUnion(benchmark::State& state) {
  PolyMap F = example_map();
  for (auto _ : state) {
    benchmark::DoNotOptimize(stratify_union(F));
  }
}
BENCHMARK(BM_StratifyUnion);

}  // namespace

BENCHMARK_MAIN();
