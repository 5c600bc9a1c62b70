#include "support.hpp"

#include <doctest.h>

using namespace vt;

TEST_CASE("twisted differential on generators")
{
	Std2d e;
	const TwistedPatch &T = e.T;
	const Algebra &A = T.alg();
	CHECK(T.D(e.tw("iA")) == e.tw("LA - dx*dy"));
	CHECK(T.D_H(State::vacuum()) == T.H());
	CHECK(T.H() == e.tw("A*dx*dy"));
	// D(iota_X) = L_X - iota_X H3 + :A iota_X H2:, H3 = 0 and H2 = dx dy on std2d
	CHECK(T.D(e.tw("iota(x)")) == e.tw("Lie(x) + A*dy"));
	CHECK(T.D(e.tw("iota(y)")) == e.tw("Lie(y) - A*dx"));
	CHECK(T.D(T.xi()) == A.derivative(T.form(e.s.scene().Hhat2())));
	auto f = parse_form("x^2*dy + y", e.s.scene().base);
	CHECK(T.D(T.form(f)) == T.form(d(f)));
}

TEST_CASE("twisted differential with flux")
{
	Session s(BundleScene::load(SCENE_DIR "/dim3.scene"));
	const TwistedPatch &T = s.pair().twisted();
	const BundleScene &sc = s.scene();
	auto P = [&](const std::string &t) { return s.parse(t, Side::Twisted); };
	VectorField Z = VectorField::coordinate(3, 2);
	// iota_Z H3 = (1 + x) dx dy, iota_Z H2 = iota_Z (dy dz) = -dy
	CHECK(contract(Z, sc.H3) == parse_form("(1 + x)*dx*dy", sc.base));
	CHECK(T.D(P("iota(z)")) == P("Lie(z) - (1 + x)*dx*dy - A*dy"));
	SweepConfig cfg;
	cfg.samples = 80;
	auto xs = sample_states(T.alg(), cfg, cfg.samples);
	for (auto &a : xs)
		CHECK(T.D_H(T.D_H(a)).is_zero());
}

TEST_CASE("Fourier sectors")
{
	Std2d e;
	const TwistedPatch &T = e.T;
	for (int n : {-2, 1, 3})
		CHECK(T.alg().product(e.tw("LA"), T.E(n), 0) == Rational(n) * T.E(n));
	State a = e.tw("ph(2)*x*dy");
	CHECK(T.fourier_project(a, 2) == a);
	CHECK(T.fourier_project(a, 1).is_zero());
	SweepConfig cfg;
	for (auto &s : sample_states(T.alg(), cfg, 60)) {
		State sum;
		for (int n = -4; n <= 4; ++n) {
			State p = T.fourier_project(s, n);
			CHECK(T.sector_operator(p) == Rational(n) * p);
			sum += p;
		}
		CHECK(sum == s);
	}
}

TEST_CASE("untwisting is an isomorphism intertwining the differentials")
{
	Std2d e;
	const TwistedPatch &T = e.T;
	const TwistedModel &M = T.model();
	auto f = parse_form("x*dy + y^2", e.s.scene().base);
	CHECK(T.untwist(T.form(f)) == M.form(f));
	SweepConfig cfg;
	cfg.samples = 100;
	for (auto &r : check_untwist(e.s, cfg)) {
		CAPTURE(r.name);
		CAPTURE(r.witness);
		CHECK(r.pass);
	}
	for (auto &a : sample_states(M.alg(), cfg, 60))
		CHECK(T.retwist(T.untwist(a)) == a);
}

TEST_CASE("the listed table variant fails consistency")
{
	BundleScene sc = BundleScene::std2d();
	TwistedPatch listed(sc, TwistedPatch::Table::Listed);
	ConsistencyOptions opt;
	opt.relations = listed.relations();
	CHECK_FALSE(check_consistency(listed.alg(), opt).pass);
	TwistedPatch derived(sc);
	opt.relations = derived.relations();
	CHECK(check_consistency(derived.alg(), opt).pass);
}
