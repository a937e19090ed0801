#include <benchmark/benchmark.h>

#include "g2/localize.hpp"
#include "g2/proofkit.hpp"
#include "g2/relations.hpp"

using namespace g2;

static void BM_MatrixProduct(benchmark::State& state, const char* ring) {
  const Ring r = Ring::parse(ring);
  const Chevalley g(calibrated_table(), r);
  const Matrix a = g.w(kAlpha1, r->one()).matrix(), b = g.x(Root{3, 2}, r->one()).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK_CAPTURE(BM_MatrixProduct, zmod7, "zmod:7");
BENCHMARK_CAPTURE(BM_MatrixProduct, gf4, "gf:2^2");
BENCHMARK_CAPTURE(BM_MatrixProduct, integers, "int");

static void BM_SymbolicCommutator(benchmark::State& state) {
  const Ring p = symbolic_ring(Ring::integers());
  const auto* poly = p.as<PolynomialRing>();
  const Chevalley g(calibrated_table(), p);
  const GroupMatrix a = g.x(kAlpha2, poly->variable(0)), b = g.x(kAlpha1, poly->variable(1));
  for (auto _ : state) benchmark::DoNotOptimize(commutator(a, b));
}
BENCHMARK(BM_SymbolicCommutator);

static void BM_VerifyR2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_R2(calibrated_table(), Ring::integers()));
}
BENCHMARK(BM_VerifyR2)->Unit(benchmark::kMillisecond);

static void BM_Jacobi(benchmark::State& state) {
  const auto t = calibrated_table();
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobi(t));
}
BENCHMARK(BM_Jacobi)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state, const char* ring) {
  const Ring r = Ring::parse(ring);
  const Chevalley g(calibrated_table(), r);
  const GeneratorRelations rel(calibrated_table());
  std::mt19937_64 rng(0);
  const auto rs = random_standard_spec(g, rng, true, 4);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_standard(rs.spec, rel));
}
BENCHMARK_CAPTURE(BM_Decompose, zmod7, "zmod:7")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decompose, gf4, "gf:2^2")->Unit(benchmark::kMillisecond);

static void BM_DiagonalEmbed(benchmark::State& state) {
  const Ring r = Ring::modular(12);
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_embed(r));
}
BENCHMARK(BM_DiagonalEmbed)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
