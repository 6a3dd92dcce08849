#include <benchmark/benchmark.h>

#include "polylog/eval.hpp"
#include "polylog/expr.hpp"
#include "polylog/identities.hpp"
#include "polylog/relations.hpp"

using namespace polylog;

static void BM_DirectSum(benchmark::State& state) {
  const Precision prec(static_cast<int>(state.range(0)));
  const LambdaSpec spec = LambdaSpec::delta({2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(direct_nested_sum(spec, prec));
}
BENCHMARK(BM_DirectSum)->Arg(30)->Arg(100)->Arg(300);

static void BM_HolderZeta(benchmark::State& state) {
  const Precision prec(static_cast<int>(state.range(0)));
  const LambdaSpec spec = LambdaSpec::zeta({3, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_lambda(spec, prec));
}
BENCHMARK(BM_HolderZeta)->Arg(30)->Arg(100)->Arg(300);

static void BM_HolderAlternating(benchmark::State& state) {
  const Precision prec(50);
  const LambdaSpec spec = lambda_from_z_string(MzvString{-2, 1, -1});
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_lambda(spec, prec));
}
BENCHMARK(BM_HolderAlternating);

static void BM_Stuffle(benchmark::State& state) {
  const LambdaSpec u = LambdaSpec::zeta({2, 1, 3});
  const LambdaSpec v = LambdaSpec::zeta({4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(stuffle_identity(u, v));
}
BENCHMARK(BM_Stuffle);

static void BM_Lindep(benchmark::State& state) {
  const ExprPtr e = parse_expression("lindep([12*z(3), Pi^2*log(2), zp(2,2,1), zp(2,3)])");
  const Precision prec = Precision::for_weight(static_cast<int>(state.range(0)), 3);
  std::vector<BigReal> values;
  for (const auto& child : e->children) values.push_back(std::get<BigReal>(eval_expression(*child, prec)));
  for (auto _ : state) benchmark::DoNotOptimize(lindep(values));
}
BENCHMARK(BM_Lindep)->Arg(40)->Arg(100);

static void BM_Parse(benchmark::State& state) {
  const std::string text = "lindep([z(5), z(2)*z(3), zp(2,5), Pi^4*log(2), -Pi^2*z(3)/(1/7 + 2)])";
  for (auto _ : state) benchmark::DoNotOptimize(parse_expression(text));
}
BENCHMARK(BM_Parse);

BENCHMARK_MAIN();
