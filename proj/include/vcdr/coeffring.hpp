#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcdr {

using Rational = mpq_class;

class EngineError : public std::runtime_error
{
  public:
	EngineError(std::string code, const std::string &what)
	    : std::runtime_error(code + ": " + what), code_(std::move(code))
	{}
	const std::string &code() const { return code_; }

  private:
	std::string code_;
};

inline EngineError cap_exceeded(const std::string &what)
{
	return EngineError("CAP_EXCEEDED", what);
}

// Negative values mean unbounded.
struct Caps {
	int poly_degree = -1;
	int phase = -1;
	int weight = -1;
};

struct BasePatch {
	std::vector<std::string> coords;

	BasePatch() = default;
	explicit BasePatch(std::vector<std::string> names);
	static BasePatch standard(int dim);

	int dim() const { return static_cast<int>(coords.size()); }
	int index_of(const std::string &name) const;
};

// One monomial f * dx^I * e^{n theta}; I is a bitmask read in increasing order.
struct FormKey {
	int phase = 0;
	std::uint32_t mask = 0;
	std::vector<int> exps;

	auto operator<=>(const FormKey &) const = default;
	int degree() const;
	int poly_degree() const;
};

class CoefficientForm
{
  public:
	using Terms = std::map<FormKey, Rational>;

	CoefficientForm() = default;
	explicit CoefficientForm(int dim) : dim_(dim) {}

	static CoefficientForm constant(int dim, const Rational &c);
	static CoefficientForm coordinate(int dim, int i);
	static CoefficientForm dcoord(int dim, int i);
	static CoefficientForm phase_unit(int dim, int n);
	static CoefficientForm monomial(int dim, const Rational &c, std::vector<int> exps,
	                                std::uint32_t mask, int phase = 0);

	int dim() const { return dim_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_function() const;
	// -1 when the form is not homogeneous (or zero).
	int homogeneous_degree() const;
	int max_poly_degree() const;
	int max_abs_phase() const;

	void add_term(const FormKey &k, const Rational &c);
	CoefficientForm &operator+=(const CoefficientForm &o);
	CoefficientForm &operator-=(const CoefficientForm &o);
	CoefficientForm &operator*=(const Rational &c);
	CoefficientForm operator-() const;
	friend CoefficientForm operator+(CoefficientForm a, const CoefficientForm &b) { return a += b; }
	friend CoefficientForm operator-(CoefficientForm a, const CoefficientForm &b) { return a -= b; }
	friend CoefficientForm operator*(const Rational &c, CoefficientForm a) { return a *= c; }
	bool operator==(const CoefficientForm &o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

	// Partial derivative of the coefficients; the dx word is untouched.
	CoefficientForm partial(int i) const;
	// Substitute coordinates x^i -> g[i] in a function (no dx, phase 0).
	CoefficientForm substitute(const std::vector<CoefficientForm> &g) const;

	void enforce(const Caps &caps) const;
	std::string str(const BasePatch &patch) const;

  private:
	int dim_ = 0;
	Terms terms_;
};

// Sign of dx^a ^ dx^b (bitmasks); 0 when they overlap.
int wedge_sign(std::uint32_t a, std::uint32_t b);

CoefficientForm wedge(const CoefficientForm &a, const CoefficientForm &b, const Caps &caps = {});
// Exterior derivative on the base; the phase label is carried along.
CoefficientForm d(const CoefficientForm &w, const Caps &caps = {});

struct VectorField {
	std::vector<CoefficientForm> comps;
	CoefficientForm vertical;

	VectorField() = default;
	explicit VectorField(int dim);
	static VectorField coordinate(int dim, int i);
	static VectorField from(std::vector<CoefficientForm> comps);

	int dim() const { return static_cast<int>(comps.size()); }
	bool operator==(const VectorField &) const = default;
	// X(f) with the vertical part acting on phases as n.
	CoefficientForm apply(const CoefficientForm &f) const;
	VectorField scaled(const CoefficientForm &g) const;
	VectorField horizontal() const;
	std::string str(const BasePatch &patch) const;
};

CoefficientForm contract(const VectorField &X, const CoefficientForm &w);
CoefficientForm lie(const VectorField &X, const CoefficientForm &w, const Caps &caps = {});
VectorField bracket(const VectorField &X, const VectorField &Y);

// alpha + beta ^ dtheta in the Fourier sector `phase` of a circle bundle with
// trivialised connection form dtheta.
struct CircleForm {
	CoefficientForm alpha;
	CoefficientForm beta;
	int phase = 0;

	bool operator==(const CircleForm &) const = default;
};

CircleForm d(const CircleForm &w);
// Contraction with scale * d/dtheta.
CircleForm contract_vertical(const CircleForm &w, const Rational &scale);

} // namespace vcdr
