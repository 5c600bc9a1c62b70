#include "support.hpp"

#include <doctest.h>

using namespace vt;

TEST_CASE("parallel and serial sweeps give the same record")
{
	Std2d e;
	const ExoticPatch &X = e.X;
	SweepConfig cfg;
	auto xs = sample_states(X.alg(), cfg, 120);
	DefectFn sq = [&](const State &a) { return X.apply_full(X.apply_full(a)); };
	auto s = sweep_serial("d2", X.alg(), X.alg(), xs, sq);
	auto p = sweep_parallel("d2", X.alg(), X.alg(), xs, sq);
	CHECK(s.pass);
	CHECK(s.count == xs.size());
	CHECK(format_lines({s}) == format_lines({p}));

	// a failing identity: the first failure by sample order wins in both
	DefectFn bad = [&](const State &a) { return X.weight_bound(a) >= 2 ? a : State{}; };
	auto bs = sweep_serial("bad", X.alg(), X.alg(), xs, bad);
	auto bp = sweep_parallel("bad", X.alg(), X.alg(), xs, bad);
	CHECK_FALSE(bs.pass);
	CHECK(bs.witness == bp.witness);
	CHECK(format_lines({bs}) == format_lines({bp}));
}

TEST_CASE("samplers are seeded and respect the caps")
{
	Std2d e;
	SweepConfig cfg;
	cfg.weight_cap = 2;
	auto a = sample_states(e.X.alg(), cfg, 50), b = sample_states(e.X.alg(), cfg, 50);
	CHECK(a == b);
	for (auto &s : a) {
		CHECK_FALSE(s.is_zero());
		CHECK(e.X.weight_bound(s) <= 2);
	}
	cfg.seed = 8;
	CHECK_FALSE(sample_states(e.X.alg(), cfg, 50) == a);
}

TEST_CASE("reports are sorted and deterministic")
{
	Std2d e, f;
	SweepConfig cfg;
	cfg.samples = 40;
	auto r1 = suite_all(e.s, cfg);
	auto r2 = suite_all(f.s, cfg);
	CHECK(format_lines(r1) == format_lines(r2));
	CHECK(std::is_sorted(r1.begin(), r1.end(), [](auto &x, auto &y) { return x.name < y.name; }));
	CHECK(all_pass(r1));
	cfg.parallel = false;
	CHECK(format_lines(suite_all(e.s, cfg)) == format_lines(r1));
}
