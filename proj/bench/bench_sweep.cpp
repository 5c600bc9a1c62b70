#include "vcdr/checks.hpp"

#include <benchmark/benchmark.h>

using namespace vcdr;

// apply_full^2 over seeded exotic states. Each iteration starts from a fresh session so
// the derivation caches are cold for both variants.
static void square_zero(benchmark::State &st, bool parallel)
{
	SweepConfig cfg;
	cfg.samples = static_cast<int>(st.range(0));
	for (auto _ : st) {
		st.PauseTiming();
		Session s(BundleScene::std2d());
		const ExoticPatch &X = s.pair().exotic();
		auto xs = sample_states(X.alg(), cfg, cfg.samples);
		st.ResumeTiming();
		auto r = sweep("d2", X.alg(), X.alg(), xs,
		               [&](const State &a) { return X.apply_full(X.apply_full(a)); }, parallel);
		if (!r.pass)
			st.SkipWithError("apply_full^2 != 0");
		benchmark::DoNotOptimize(r.count);
	}
}

static void BM_serial(benchmark::State &st) { square_zero(st, false); }
static void BM_parallel(benchmark::State &st) { square_zero(st, true); }

BENCHMARK(BM_serial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
