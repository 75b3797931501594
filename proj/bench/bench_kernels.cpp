#include <benchmark/benchmark.h>

#include "omegat/cca.hpp"
#include "omegat/emptiness.hpp"
#include "omegat/exponent.hpp"
#include "omegat/fuzz.hpp"
#include "omegat/nfa.hpp"
#include "omegat/translate.hpp"

using namespace omegat;

namespace {

struct Factors {
  nfa::Nfa witness{{}}, prefix{{}};
};

const Factors& factors() {
  static const Factors f = [] {
    const auto a = cca::simplify(translate::compile(expr::parse_omega_t("((a*b)* a^T b)^w")));
    return Factors{emptiness::build_potential_witness_nfa(a).nfa, emptiness::build_prefix_nfa(a)};
  }();
  return f;
}

std::vector<cca::CCA> batch() {
  std::vector<cca::CCA> out;
  for (const char* text : {"(a^T b)^w", "((a*b)* a^T b)^w", "(a* b)^w", "((a+b)^T b)^w",
                           "((a b)^T + b)^w", "(a (b^T a)*)^w"})
    out.push_back(translate::compile(expr::parse_omega_t(text)));
  return out;
}

const std::vector<expr::ExponentGen>& grid() {
  static const auto g = expr::generator_grid(
      {expr::ExponentGen::constant(1), expr::ExponentGen::ramp(2, 3),
       expr::ExponentGen::staircase(), expr::ExponentGen::periodic({2, 4, 2})},
      3);
  return g;
}

void BM_Intersect(benchmark::State& state) {
  const auto& f = factors();
  for (auto _ : state) benchmark::DoNotOptimize(nfa::intersect(f.witness, f.prefix));
}
void BM_IntersectSerial(benchmark::State& state) {
  const auto& f = factors();
  for (auto _ : state) benchmark::DoNotOptimize(nfa::intersect_serial(f.witness, f.prefix));
}

void BM_DecideBatch(benchmark::State& state) {
  const auto b = batch();
  for (auto _ : state) benchmark::DoNotOptimize(emptiness::decide_batch(b));
}
void BM_DecideBatchSerial(benchmark::State& state) {
  const auto b = batch();
  for (auto _ : state) benchmark::DoNotOptimize(emptiness::decide_batch_serial(b));
}

void BM_Fuzz(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fuzz::run(7, 200, 40));
}
void BM_FuzzSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fuzz::run_serial(7, 200, 40));
}

void BM_DecompositionGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(expr::check_decompositions(grid(), 200));
}
void BM_DecompositionGridSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(expr::check_decompositions_serial(grid(), 200));
}

}  // namespace

BENCHMARK(BM_Intersect)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntersectSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecideBatch)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecideBatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fuzz)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuzzSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecompositionGrid)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecompositionGridSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
