#include <benchmark/benchmark.h>

#include "ltf/arith.hpp"
#include "ltf/pnmatrix.hpp"
#include "ltf/psiq.hpp"
#include "ltf/spancheck.hpp"
#include "modring.hpp"

namespace {

const ltf::ExtensionSpec& ram32() {
  static const auto spec = ltf::make_extension(3, 2, ltf::ExtKind::ramified);
  return spec;
}

void BM_DMatrix(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ltf::d_matrix(ram32(), N));
}
BENCHMARK(BM_DMatrix)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_SpanFast(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ltf::run_span_check(ram32(), N));
}
BENCHMARK(BM_SpanFast)->Arg(120)->Arg(240)->Unit(benchmark::kMillisecond);

void BM_SpanExact(benchmark::State& state) {
  ltf::SpanOptions opts;
  opts.engine = ltf::SpanOptions::Engine::exact;
  for (auto _ : state) benchmark::DoNotOptimize(ltf::run_span_check(ram32(), 60, opts));
}
BENCHMARK(BM_SpanExact)->Unit(benchmark::kMillisecond);

void BM_PsiOracle(benchmark::State& state) {
  const auto spec = ltf::make_extension(3, 2, ltf::ExtKind::unramified);
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const ltf::PsiOracle oracle(spec, K);
    benchmark::DoNotOptimize(oracle.apply(ltf::PolyL::monomial(spec.field().one(), K)));
  }
}
BENCHMARK(BM_PsiOracle)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

template <int L>
void BM_ModPmDot(benchmark::State& state) {
  using R = ltf::detail::ModPm<L, false>;
  const R ring(3, static_cast<unsigned>(38 * L), 2);
  auto a = ring.from_mpz(ltf::pow_mpz(2, 40 * L) + 12345);
  auto b = ring.from_mpz(ltf::pow_mpz(5, 20 * L) + 777);
  for (auto _ : state) {
    const typename R::E* pa[2] = {&a, &b};
    const typename R::E* pb[2] = {&b, &a};
    a = ring.template dot<2>(pa, pb);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK_TEMPLATE(BM_ModPmDot, 1);
BENCHMARK_TEMPLATE(BM_ModPmDot, 2);
BENCHMARK_TEMPLATE(BM_ModPmDot, 4);

}  // namespace

BENCHMARK_MAIN();
