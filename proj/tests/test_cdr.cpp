#include "support.hpp"

#include <doctest.h>

using namespace vt;

namespace {

State P(const Session &s, const std::string &t) { return s.parse(t, Side::Cdr); }

} // namespace

TEST_CASE("topological algebra for n = 1, 2, 3")
{
	for (int n = 1; n <= 3; ++n) {
		auto rs = check_topological(n);
		CHECK(rs.size() == 11);
		for (auto &r : rs) {
			CAPTURE(r.name);
			CAPTURE(r.witness);
			CHECK(r.pass);
		}
	}
}

TEST_CASE("central terms")
{
	for (int n = 1; n <= 3; ++n) {
		CdrPatch p(BasePatch::standard(n));
		const Algebra &A = p.alg();
		CHECK(A.product(p.J(), p.J(), 1) == Rational(n) * State::vacuum());
		CHECK(A.product(p.Q(), p.G(), 2) == Rational(n) * State::vacuum());
		CHECK(A.product(p.L(), p.L(), 3).is_zero());
	}
}

TEST_CASE("iota and Lie operators")
{
	Session s = flat_session(2);
	const CdrPatch &p = s.cdr();
	const Algebra &A = p.alg();
	CHECK(p.iota(VectorField::coordinate(2, 0)) == p.b(0));
	CHECK(P(s, "Lie([0, x])") == P(s, "beta2*x + c1*b2"));
	std::mt19937_64 rng(2);
	for (int t = 0; t < 30; ++t) {
		VectorField X = random_field(2, rng), Y = random_field(2, rng);
		CHECK(A.product(p.lieop(X), p.iota(Y), 0) == p.iota(bracket(X, Y)));
		CHECK(A.product(p.iota(X), p.iota(Y), 0).is_zero());
		CHECK(A.product(p.lieop(X), p.lieop(Y), 0) == p.lieop(bracket(X, Y)));
	}
	for (auto &rel : p.relations()) {
		CAPTURE(rel.name);
		CHECK(rel.value().is_zero());
	}
}

TEST_CASE("differential")
{
	Session s = flat_session(2);
	const CdrPatch &p = s.cdr();
	CHECK(p.D(State::vacuum()).is_zero());
	auto f = parse_form("x^2*y + y", p.base());
	CHECK(p.D(p.form(f)) == p.form(d(f)));
	State bg = P(s, "beta1*x");
	CHECK(p.D(p.G0(bg)) + p.G0(p.D(bg)) == bg);
}

TEST_CASE("coordinate changes")
{
	BasePatch b = BasePatch::standard(2);
	CdrPatch src(b), dst(b);
	CoordinateChange id{{parse_form("x", b), parse_form("y", b)}, {parse_form("x", b), parse_form("y", b)}};
	auto h = coordinate_change(src, dst, id);
	for (int i = 0; i < 2; ++i) {
		CHECK((*h)(src.b(i)) == dst.b(i));
		CHECK((*h)(src.beta(i)) == dst.beta(i));
	}
	CoordinateChange lin{{parse_form("2*x", b), parse_form("y", b)}, {parse_form("1/2*x", b), parse_form("y", b)}};
	auto g = coordinate_change(src, dst, lin);
	CHECK((*g)(src.c(0)) == 2 * dst.c(0));
	CHECK((*g)(src.b(0)) == Rational(1, 2) * dst.b(0));
	CHECK((*g)(src.beta(0)) == Rational(1, 2) * dst.beta(0));

	CoordinateChange bad{{parse_form("x + y^2", b), parse_form("y", b)}, {parse_form("x", b), parse_form("y", b)}};
	CHECK_THROWS_AS(coordinate_change(src, dst, bad), EngineError);

	// nonlinear change: a homomorphism, L and Q are invariant, J shifts by d tr log(dg)
	CoordinateChange nl{{parse_form("x + y^2", b), parse_form("y", b)},
	                    {parse_form("x - y^2", b), parse_form("y", b)}};
	auto k = coordinate_change(src, dst, nl);
	CHECK(ope_defects(*k, sample_letters(src.alg(), {})).empty());
	CHECK((*k)(src.Q()) == dst.Q());
	CHECK((*k)(src.L()) == dst.L());
	CHECK((*k)(src.G()) == dst.G());
	CHECK((*k)(src.J()) == dst.J());

	CoordinateChange tri{{parse_form("x", b), parse_form("y + x^3", b)}, {parse_form("x", b), parse_form("y - x^3", b)}};
	auto q = coordinate_change(src, dst, tri);
	CHECK(ope_defects(*q, sample_letters(src.alg(), {})).empty());
	auto both = coordinate_change(src, dst, compose(nl, tri));
	CHECK(ope_defects(*both, sample_letters(src.alg(), {})).empty());
}

TEST_CASE("property: D^2 = 0 and [D, G0] = L0 on seeded monomials")
{
	for (int n = 1; n <= 3; ++n) {
		CdrPatch p(BasePatch::standard(n));
		SweepConfig cfg;
		cfg.samples = 60;
		for (auto &r : check_cdr(p, cfg)) {
			CAPTURE(r.name);
			CAPTURE(r.witness);
			CHECK(r.pass);
		}
	}
}
