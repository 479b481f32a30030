#include <benchmark/benchmark.h>

#include "polyana/cocycle.hpp"
#include "polyana/derivmap.hpp"
#include "polyana/eqcat.hpp"
#include "polyana/finlog.hpp"
#include "polyana/padic_sym.hpp"
#include "polyana/solver.hpp"

using namespace polyana;

static void BM_FinitePolylogEval(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto lp = finite_polylog(2, p);
  FieldPtr f = build_extension(p, 2);
  std::uint64_t i = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp->eval(Fq::from_index(f, i)));
    i = i % (f->q - 1) + 1;
  }
}
BENCHMARK(BM_FinitePolylogEval)->Arg(13)->Arg(101);

static void BM_StrongVerify(benchmark::State& state, const char* id) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  FieldPtr f = prime_field(p);
  const auto s = build<Fq>(id, f);
  for (auto _ : state) benchmark::DoNotOptimize(verify_strong(s, s.weight - 1).holds);
}
BENCHMARK_CAPTURE(BM_StrongVerify, feit, "feit")->Arg(13)->Arg(31)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_StrongVerify, kummer_spence, "kummer_spence")->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StrongVerify, cathelineau_J, "cathelineau_J")->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_WeakVerify(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  FieldPtr f = prime_field(p);
  const auto s = build<Fq>("kontsevich_B", f);
  for (auto _ : state) benchmark::DoNotOptimize(verify_weak(s, s.weight - 1, f).holds);
}
BENCHMARK(BM_WeakVerify)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_Characterize(benchmark::State& state, const char* preset) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(characterize(preset, p).dim);
}
BENCHMARK_CAPTURE(BM_Characterize, FEIT, "FEIT")->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Characterize, L2_PAIR, "L2_PAIR")->Arg(97)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Characterize, J, "J")->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_DeriveFiveTerm(benchmark::State& state) {
  FieldPtr f = prime_field(static_cast<std::uint32_t>(state.range(0)));
  const auto s = build<Fq>("five_term_classical", f);
  const auto d = standard_derivation<Fq>(f, s.variables);
  for (auto _ : state) benchmark::DoNotOptimize(derive(s, d).sum.size());
}
BENCHMARK(BM_DeriveFiveTerm)->Arg(11)->Unit(benchmark::kMicrosecond);

static void BM_PadicRecursion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_recursion(n));
}
BENCHMARK(BM_PadicRecursion)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Coboundary(benchmark::State& state) {
  const Cocycle c = Cocycle::standard(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_solve(c).consistent);
}
BENCHMARK(BM_Coboundary)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_CocycleCheck(benchmark::State& state) {
  const Cocycle c = Cocycle::standard(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_cocycle(c).holds);
}
BENCHMARK(BM_CocycleCheck)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_Entropy(benchmark::State& state) {
  const std::vector<Rational> d{Rational(1) / 8, Rational(1) / 8, Rational(1) / 4, Rational(1) / 6, Rational(1) / 3};
  for (auto _ : state) benchmark::DoNotOptimize(entropy_mod_p(d, 11).value);
}
BENCHMARK(BM_Entropy);
BENCHMARK_MAIN();
