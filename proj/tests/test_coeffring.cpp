#include "support.hpp"

#include <doctest.h>

using namespace vt;

namespace {

const BasePatch xy = BasePatch::standard(2);
const BasePatch xyz = BasePatch::standard(3);

CoefficientForm F(const std::string &t, const BasePatch &b = xy) { return parse_form(t, b); }

} // namespace

TEST_CASE("exterior derivative on polynomial forms")
{
	CHECK(d(F("x*dy")) == F("dx*dy"));
	CHECK(d(F("1")).is_zero());
	CHECK(d(F("x^2*y*dx")) == F("-x^2*dx*dy"));
	CHECK(d(F("x^2*y*dx")) == F("x^2*dy*dx"));
	CHECK(F("dx*dx").is_zero());
	CHECK(d(d(F("x^3*y^2 + x*y*dy"))).is_zero());
}

TEST_CASE("wedge signs and phases")
{
	CHECK(wedge(F("x*dy"), F("y*dx")) == F("-x*y*dx*dy"));
	CHECK(wedge(F("ph(2)"), F("ph(-3)")) == F("ph(-1)"));
	CHECK(wedge(F("dx"), F("dx")).is_zero());
	CHECK(F("dy*dx") == F("-dx*dy"));
}

TEST_CASE("wedge_sign agrees with inversion counting")
{
	std::mt19937_64 rng(11);
	for (int t = 0; t < 2000; ++t) {
		std::uint32_t a = rng() & 0xff, b = rng() & 0xff;
		std::vector<int> v = bits(a), w = bits(b);
		v.insert(v.end(), w.begin(), w.end());
		CHECK(wedge_sign(a, b) == sort_sign(v));
	}
}

TEST_CASE("contraction, bracket and Lie derivative")
{
	VectorField dx = VectorField::coordinate(2, 0), dy = VectorField::coordinate(2, 1);
	CHECK(contract(dx, F("dx*dy")) == F("dy"));
	CHECK(contract(dy, F("dx*dy")) == F("-dx"));
	CHECK(bracket(dx, dy.scaled(F("x"))) == dy);
	CHECK(lie(dx.scaled(F("x")), F("dx")) == F("dx"));
	CHECK(lie(dx.scaled(F("x")), F("x^2*dy")) == F("2*x^2*dy"));
}

TEST_CASE("property: d is a graded derivation and d^2 = 0")
{
	std::mt19937_64 rng(3);
	for (int t = 0; t < 300; ++t) {
		CoefficientForm a = random_form(3, rng), b = random_form(3, rng);
		CHECK(d(d(a)).is_zero());
		for (auto &[k, c] : a.terms()) {
			CoefficientForm m(3);
			m.add_term(k, c);
			Rational sg = (k.degree() & 1) ? -1 : 1;
			CHECK(d(wedge(m, b)) == wedge(d(m), b) + sg * wedge(m, d(b)));
		}
	}
}

TEST_CASE("property: Cartan calculus")
{
	std::mt19937_64 rng(5);
	CoefficientForm f = F("x + y*z", xyz);
	for (int t = 0; t < 200; ++t) {
		VectorField X = random_field(3, rng), Y = random_field(3, rng);
		CoefficientForm w = random_form(3, rng);
		CHECK(lie(X, d(w)) == d(lie(X, w)));
		CHECK(lie(X, f) == X.apply(f));
		CHECK(lie(X, contract(Y, w)) - contract(Y, lie(X, w)) == contract(bracket(X, Y), w));
	}
}

TEST_CASE("substitution composes polynomial maps")
{
	std::vector<CoefficientForm> g{F("x + y^2"), F("y")};
	CHECK(F("x*y").substitute(g) == F("x*y + y^3"));
	CHECK_THROWS_AS(F("dx").substitute(g), EngineError);
}

TEST_CASE("caps")
{
	Caps c;
	c.poly_degree = 2;
	CHECK_THROWS_AS(wedge(F("x^2"), F("y"), c), EngineError);
	try {
		wedge(F("x^2"), F("y"), c);
	} catch (const EngineError &e) {
		CHECK(e.code() == "CAP_EXCEEDED");
	}
}

TEST_CASE("circle forms")
{
	// d(e^{n theta}) = n dtheta e^{n theta}, read as alpha=1 -> beta = n
	CircleForm w{F("1"), CoefficientForm(2), 3};
	CircleForm dw = d(w);
	CHECK(dw.alpha.is_zero());
	CHECK(dw.beta == F("3"));
	CircleForm z = d(dw);
	CHECK(z.alpha.is_zero());
	CHECK(z.beta.is_zero());
}
