#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "slowcon/fgh.hpp"
#include "slowcon/gentzen.hpp"
#include "slowcon/hilbert.hpp"
#include "slowcon/infinitary.hpp"
#include "slowcon/ordinal.hpp"

using namespace slowcon;

static void BM_FghEvalF2(benchmark::State& st) {
  const Ordinal two = Ordinal::natural(2);
  for (auto _ : st) benchmark::DoNotOptimize(fgh_eval(two, st.range(0), EvalBudget{}));
}
BENCHMARK(BM_FghEvalF2)->Arg(4)->Arg(10)->Arg(40);

// Cutoff evaluation of a huge value: cost is dominated by how fast the bound is hit.
static void BM_FghCutoffOmegaSquared(benchmark::State& st) {
  const Ordinal a = Ordinal::parse("w^(2)");
  const EvalBudget b{1'000'000, Natural(1) << st.range(0)};
  for (auto _ : st) benchmark::DoNotOptimize(fgh_eval(a, 3, b));
}
BENCHMARK(BM_FghCutoffOmegaSquared)->Arg(64)->Arg(4096);

static void BM_FepsInverse(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(feps_inverse(st.range(0)));
}
BENCHMARK(BM_FepsInverse)->Arg(8)->Arg(1'000'000);

// A 15-step explicit 2-descent path.
static void BM_StepDown(benchmark::State& st) {
  const Ordinal top = omega_n(2), target = Ordinal::parse("w^(2)*2");
  for (auto _ : st) benchmark::DoNotOptimize(step_down(top, target, 2, 1'000));
}
BENCHMARK(BM_StepDown);

static void BM_OnDescentPath(benchmark::State& st) {
  const Ordinal top = omega_n(3), target = Ordinal::parse("w^(w + 1)");
  for (auto _ : st) benchmark::DoNotOptimize(on_descent_path(top, target, 2));
}
BENCHMARK(BM_OnDescentPath);

static void BM_GenTi(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(gentzen::gen_ti(static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_GenTi)->Arg(2)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_CheckGenTi(benchmark::State& st) {
  auto proof = gentzen::gen_ti(static_cast<unsigned>(st.range(0)));
  auto theory = *hilbert::theory_by_id("pa-o");
  for (auto _ : st) benchmark::DoNotOptimize(hilbert::check(proof, theory));
  st.counters["lines"] = static_cast<double>(proof.lines.size());
}
BENCHMARK(BM_CheckGenTi)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ProofLength(benchmark::State& st) {
  auto proof = gentzen::gen_ti(8);
  for (auto _ : st) benchmark::DoNotOptimize(hilbert::proof_length(proof));
}
BENCHMARK(BM_ProofLength)->Unit(benchmark::kMillisecond);

static void BM_ReduceTrace(benchmark::State& st) {
  std::ifstream in(std::string(SLOWCON_FIXTURE_DIR) + "/infinitary/cut_feps.sexp");
  std::stringstream ss;
  ss << in.rdbuf();
  auto proof = inf::parse_proof(ss.str());
  for (auto _ : st) benchmark::DoNotOptimize(inf::reduce_trace(proof, Ordinal::omega(), {}));
}
BENCHMARK(BM_ReduceTrace);

static void BM_SurrogateSpotCheck(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(inf::surrogate_spot_check({10'000'000, Natural(1) << 4096}));
}
BENCHMARK(BM_SurrogateSpotCheck)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
