#include "support.hpp"

#include <doctest.h>

using namespace vt;

namespace {

std::string code_of(const std::function<void()> &f)
{
	try {
		f();
	} catch (const EngineError &e) {
		return e.code();
	}
	return "";
}

} // namespace

TEST_CASE("expressions")
{
	Std2d e;
	Session s = flat_session(2);
	CHECK(s.parse(":-1(b1, c1):", Side::Cdr) == s.cdr().alg().nprod(s.cdr().b(0), s.cdr().c(0)));
	CHECK(e.ex(":0(LA, s(2))") == e.ex("-2*s(2)"));
	CHECK(e.tw("d(d(x*dy))").is_zero());
	CHECK(e.tw("d(x*dy)") == e.tw("dx*dy"));
	CHECK(e.tw("del(x)") == e.T.alg().derivative(e.tw("x")));
	CHECK(e.tw("GammaA^2*LA") == e.tw("GammaA*GammaA*LA"));
	CHECK(e.tw("x^2*dy") == e.T.form(parse_form("x^2*dy", e.s.scene().base)));
	CHECK(e.ex("iota([1, 0])") == e.ex("iota(x)"));
	CHECK(e.ex("1/2*Ahat + 1/2*Ahat") == e.ex("Ahat"));
}

TEST_CASE("expression errors")
{
	Std2d e;
	CHECK(code_of([&] { e.tw("x +"); }) == "SYNTAX");
	CHECK(code_of([&] { e.tw("(x"); }) == "SYNTAX");
	CHECK(code_of([&] { e.tw("foo"); }) == "UNKNOWN_SYMBOL");
	CHECK(code_of([&] { e.tw("Ahat"); }) == "UNKNOWN_SYMBOL");
	CHECK(code_of([&] { e.ex("iA"); }) == "UNKNOWN_SYMBOL");
	try {
		e.tw("x + * y");
	} catch (const EngineError &err) {
		CHECK(std::string(err.what()).find("1:5") != std::string::npos);
	}
}

TEST_CASE("print and parse round trip")
{
	Std2d e;
	SweepConfig cfg;
	for (Side side : {Side::Cdr, Side::Twisted, Side::Exotic}) {
		const Algebra &A = e.s.alg(side);
		for (auto &a : sample_states(A, cfg, 150)) {
			std::string p = e.s.str(a, side);
			State b = e.s.parse(p, side);
			CHECK(b == a);
			CHECK(e.s.str(b, side) == p);
		}
	}
	auto rs = check_parser(e.s, cfg, 100);
	for (auto &r : rs)
		CHECK(r.pass);
}

TEST_CASE("scenes")
{
	BundleScene a = BundleScene::load(SCENE_DIR "/std2d.scene"), b = BundleScene::std2d();
	CHECK(a.A_bas == b.A_bas);
	CHECK(a.Ahat_bas == b.Ahat_bas);
	CHECK(a.H3 == b.H3);
	CHECK(b.H2() == parse_form("dx*dy", b.base));
	CHECK(b.Hhat2() == parse_form("dx*dy", b.base));
	CHECK(b.swapped().A_bas == b.Ahat_bas);
	CHECK(BundleScene::flat(3).trivial());
	CHECK_FALSE(b.trivial());
	CHECK(code_of([] { BundleScene::parse("base_dim = 2\nA_bas = x*dy\nAhat_bas = 0\n"); }) == "SYNTAX");
	// dH3 + Hhat2 ^ H2 = dx dy ^ dz du != 0
	CHECK(code_of([] {
		      BundleScene::parse("base_dim = 4\nA_bas = x*dy\nAhat_bas = z*du\nH3 = 0\n");
	      }) == "SCENE_NOT_CLOSED");
	CHECK_NOTHROW(BundleScene::parse("base_dim = 4\nA_bas = x*dy\nAhat_bas = z*du\nH3 = -x*dy*dz*du\n"));
	CHECK(code_of([] { BundleScene::parse("base_dim = 2\nA_bas = dx*dy\nAhat_bas = 0\nH3 = 0\n"); }) != "");
}
