#include "support.hpp"

#include <doctest.h>

using namespace vt;

TEST_CASE("exotic differential on generators")
{
	Std2d e;
	const ExoticPatch &X = e.X;
	CHECK(X.DZ(e.ex("Ahat")) == e.ex("LA"));
	CHECK(X.DZ(e.ex("LA")).is_zero());
	for (int n : {-2, -1, 1, 2}) {
		State s = X.S(n);
		CHECK(X.DZ(s) == Rational(-n) * X.alg().nprod(e.ex("iAhat"), s) +
		                     Rational(n) * X.alg().nprod(X.form(e.s.scene().A_bas), s));
		CHECK(X.component(s, 2) == Rational(n) * X.alg().nprod(e.ex("iAhat"), s));
	}
	CHECK(X.component(e.ex("GammaA"), 4) == e.ex("iAhat"));
	CHECK(X.component(e.ex("iAhat"), 0) == e.ex("-dx*dy"));
	CHECK(X.Hhat() == e.ex("Ahat*dx*dy"));
}

TEST_CASE("square-zero and the intermediate identities")
{
	Std2d e;
	const ExoticPatch &X = e.X;
	const Algebra &A = X.alg();
	State G = e.ex("GammaA"), dH = A.derivative(X.form(e.s.scene().Hhat2()));
	CHECK(X.D_der(X.D_der(G)) == -1 * dH);
	CHECK(X.D_nder(X.D_hat(G)) + X.D_hat(X.D_nder(G)) == dH);
	CHECK(X.apply_full(X.apply_full(G)).is_zero());
	for (int n : {-2, 1, 2}) {
		State s = X.S(n);
		CHECK(X.D_der(X.D_der(s)) == Rational(n) * A.nprod(X.form(e.s.scene().Hhat2()), s));
		CHECK(X.apply_full(X.apply_full(s)).is_zero());
	}
	auto f = parse_form("x^2*y + x*dy", e.s.scene().base);
	CHECK(X.apply_full(X.apply_full(X.form(f))).is_zero());
	for (const State &a : length_two_words(A, {-1, 2}))
		CHECK(X.apply_full(X.apply_full(a)).is_zero());
}

TEST_CASE("components sum to the full operator")
{
	Std2d e;
	const ExoticPatch &X = e.X;
	SweepConfig cfg;
	for (auto &a : sample_states(X.alg(), cfg, 80)) {
		State sum = X.DZ(a);
		for (int k = 0; k <= 6; ++k)
			sum += X.component(a, k);
		CHECK(sum == X.apply_full(a));
		CHECK(X.D_der(a) + X.D_nder(a) + X.D_hat(a) == X.apply_full(a));
	}
}

TEST_CASE("weight zero part is the classical complex")
{
	Std2d e;
	const BundleScene &sc = e.s.scene();
	auto one = CoefficientForm::constant(2, 1);
	CoefficientForm zero(2);
	for (int n : {-1, 2}) {
		auto [w0, w1] = hm_differential(sc, one, zero, n);
		CHECK(w0 == Rational(n) * sc.A_bas);
		CHECK(w1 == sc.Hhat2());
	}
	auto [z0, z1] = hm_differential(sc, zero, zero, 2);
	CHECK(z0.is_zero());
	CHECK(z1.is_zero());
	BundleScene fl = BundleScene::flat(2);
	auto closed = parse_form("x*dx + dy", fl.base);
	auto [c0, c1] = hm_differential(fl, closed, zero, 0);
	CHECK(c0.is_zero());
	CHECK(c1.is_zero());

	std::mt19937_64 rng(13);
	const ExoticPatch &X = e.X;
	for (int t = 0; t < 60; ++t) {
		CoefficientForm a = random_form(2, rng), b = random_form(2, rng);
		int n = int(rng() % 5) - 2;
		auto [p, q] = hm_differential(sc, a, b, n);
		State got = X.weight_zero_part(X.apply_full(X.weight_zero(a, b, n)));
		CHECK(got == X.weight_zero(p, q, n));
		auto [ra, rb] = X.split_weight_zero(X.weight_zero(a, b, n), n);
		CHECK(ra == a);
		CHECK(rb == b);
	}
}

TEST_CASE("exotic table consistency and relations")
{
	for (BundleScene sc : {BundleScene::std2d(), BundleScene::load(SCENE_DIR "/dim3.scene")}) {
		ExoticPatch X(sc);
		ConsistencyOptions opt;
		opt.relations = X.relations();
		auto rep = check_consistency(X.alg(), opt);
		CAPTURE(rep.first());
		CHECK(rep.pass);
		for (auto &r : X.relations()) {
			CAPTURE(r.name);
			CHECK(r.value().is_zero());
		}
	}
	ExoticPatch listed(BundleScene::std2d(), ExoticPatch::Table::Listed);
	ConsistencyOptions opt;
	opt.relations = listed.relations();
	CHECK_FALSE(check_consistency(listed.alg(), opt).pass);
}

TEST_CASE("the listed L_X L_Y pole differs by the two curvature terms")
{
	for (BundleScene sc : {BundleScene::std2d(), BundleScene::load(SCENE_DIR "/dim3.scene")}) {
		ExoticPatch derived(sc), listed(sc, ExoticPatch::Table::Listed);
		int n = sc.dim();
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j) {
				VectorField X = VectorField::coordinate(n, i), Y = VectorField::coordinate(n, j);
				CoefficientForm extra = wedge(sc.Hhat2(), contract(X, contract(Y, sc.H2()))) +
				                        wedge(sc.H2(), contract(X, contract(Y, sc.Hhat2())));
				State a = listed.alg().product(listed.gen(listed.L_id(i)), listed.gen(listed.L_id(j)), 0);
				State b = derived.alg().product(derived.gen(derived.L_id(i)), derived.gen(derived.L_id(j)), 0);
				CAPTURE(i);
				CAPTURE(j);
				CHECK(a - b == derived.form(extra));
			}
	}
}
