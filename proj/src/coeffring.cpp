#include "vcdr/coeffring.hpp"

#include <bit>
#include <cstdlib>
#include <sstream>

namespace vcdr {

BasePatch::BasePatch(std::vector<std::string> names) : coords(std::move(names))
{
	if (coords.empty() || coords.size() > 16)
		throw EngineError("PRECONDITION", "base dimension must be in 1..16");
	for (size_t i = 0; i < coords.size(); ++i)
		for (size_t j = 0; j < i; ++j)
			if (coords[i] == coords[j])
				throw EngineError("PRECONDITION", "duplicate coordinate " + coords[i]);
}

BasePatch BasePatch::standard(int dim)
{
	static const char *names[] = {"x", "y", "z", "u", "v", "w"};
	std::vector<std::string> c;
	for (int i = 0; i < dim; ++i)
		c.push_back(dim <= 6 ? std::string(names[i]) : "x" + std::to_string(i + 1));
	return BasePatch(c);
}

int BasePatch::index_of(const std::string &name) const
{
	for (int i = 0; i < dim(); ++i)
		if (coords[i] == name)
			return i;
	return -1;
}

int FormKey::degree() const { return std::popcount(mask); }

int FormKey::poly_degree() const
{
	int s = 0;
	for (int e : exps)
		s += e;
	return s;
}

CoefficientForm CoefficientForm::monomial(int dim, const Rational &c, std::vector<int> exps,
                                          std::uint32_t mask, int phase)
{
	CoefficientForm f(dim);
	exps.resize(dim, 0);
	f.add_term(FormKey{phase, mask, std::move(exps)}, c);
	return f;
}

CoefficientForm CoefficientForm::constant(int dim, const Rational &c)
{
	return monomial(dim, c, {}, 0);
}

CoefficientForm CoefficientForm::coordinate(int dim, int i)
{
	std::vector<int> e(dim, 0);
	e[i] = 1;
	return monomial(dim, 1, e, 0);
}

CoefficientForm CoefficientForm::dcoord(int dim, int i)
{
	return monomial(dim, 1, {}, 1u << i);
}

CoefficientForm CoefficientForm::phase_unit(int dim, int n)
{
	return monomial(dim, 1, {}, 0, n);
}

bool CoefficientForm::is_function() const
{
	for (auto &[k, c] : terms_)
		if (k.mask != 0 || k.phase != 0)
			return false;
	return true;
}

int CoefficientForm::homogeneous_degree() const
{
	int deg = -1;
	for (auto &[k, c] : terms_) {
		if (deg >= 0 && k.degree() != deg)
			return -1;
		deg = k.degree();
	}
	return deg;
}

int CoefficientForm::max_poly_degree() const
{
	int m = 0;
	for (auto &[k, c] : terms_)
		m = std::max(m, k.poly_degree());
	return m;
}

int CoefficientForm::max_abs_phase() const
{
	int m = 0;
	for (auto &[k, c] : terms_)
		m = std::max(m, std::abs(k.phase));
	return m;
}

void CoefficientForm::add_term(const FormKey &k, const Rational &c)
{
	if (c == 0)
		return;
	auto [it, fresh] = terms_.try_emplace(k, c);
	if (!fresh) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

CoefficientForm &CoefficientForm::operator+=(const CoefficientForm &o)
{
	if (dim_ == 0)
		dim_ = o.dim_;
	for (auto &[k, c] : o.terms_)
		add_term(k, c);
	return *this;
}

CoefficientForm &CoefficientForm::operator-=(const CoefficientForm &o)
{
	if (dim_ == 0)
		dim_ = o.dim_;
	for (auto &[k, c] : o.terms_)
		add_term(k, -c);
	return *this;
}

CoefficientForm &CoefficientForm::operator*=(const Rational &c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto &[k, v] : terms_)
		v *= c;
	return *this;
}

CoefficientForm CoefficientForm::operator-() const
{
	CoefficientForm r = *this;
	r *= -1;
	return r;
}

CoefficientForm CoefficientForm::partial(int i) const
{
	CoefficientForm r(dim_);
	for (auto &[k, c] : terms_) {
		if (k.exps[i] == 0)
			continue;
		FormKey nk = k;
		nk.exps[i] -= 1;
		r.add_term(nk, c * k.exps[i]);
	}
	return r;
}

CoefficientForm CoefficientForm::substitute(const std::vector<CoefficientForm> &g) const
{
	int out_dim = g.empty() ? dim_ : g[0].dim();
	CoefficientForm r(out_dim);
	for (auto &[k, c] : terms_) {
		if (k.mask != 0 || k.phase != 0)
			throw EngineError("PRECONDITION", "substitute expects a function");
		CoefficientForm term = constant(out_dim, c);
		for (int i = 0; i < dim_; ++i)
			for (int e = 0; e < k.exps[i]; ++e)
				term = wedge(term, g[i]);
		r += term;
	}
	return r;
}

void CoefficientForm::enforce(const Caps &caps) const
{
	if (caps.poly_degree >= 0 && max_poly_degree() > caps.poly_degree)
		throw cap_exceeded("polynomial degree above poly_cap");
	if (caps.phase >= 0 && max_abs_phase() > caps.phase)
		throw cap_exceeded("phase index above fourier_cap");
}

static std::string coeff_prefix(const Rational &c, bool first, bool bare)
{
	std::string s;
	Rational a = abs(c);
	if (c < 0)
		s = first ? "-" : " - ";
	else if (!first)
		s = " + ";
	if (bare)
		s += a.get_str();
	else if (a != 1)
		s += a.get_str() + "*";
	return s;
}

std::string CoefficientForm::str(const BasePatch &patch) const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto &[k, c] : terms_) {
		std::vector<std::string> factors;
		for (int i = 0; i < dim_; ++i) {
			if (k.exps[i] == 1)
				factors.push_back(patch.coords[i]);
			else if (k.exps[i] > 1)
				factors.push_back(patch.coords[i] + "^" + std::to_string(k.exps[i]));
		}
		for (int i = 0; i < dim_; ++i)
			if (k.mask & (1u << i))
				factors.push_back("d" + patch.coords[i]);
		if (k.phase != 0)
			factors.push_back("ph(" + std::to_string(k.phase) + ")");
		out += coeff_prefix(c, first, factors.empty());
		for (size_t i = 0; i < factors.size(); ++i)
			out += (i ? "*" : "") + factors[i];
		first = false;
	}
	return out;
}

int wedge_sign(std::uint32_t a, std::uint32_t b)
{
	if (a & b)
		return 0;
	int swaps = 0;
	for (std::uint32_t bb = b; bb; bb &= bb - 1) {
		int j = std::countr_zero(bb);
		swaps += std::popcount(a >> (j + 1));
	}
	return (swaps & 1) ? -1 : 1;
}

CoefficientForm wedge(const CoefficientForm &a, const CoefficientForm &b, const Caps &caps)
{
	int dim = std::max(a.dim(), b.dim());
	CoefficientForm r(dim);
	for (auto &[ka, ca] : a.terms())
		for (auto &[kb, cb] : b.terms()) {
			int s = wedge_sign(ka.mask, kb.mask);
			if (s == 0)
				continue;
			FormKey k{ka.phase + kb.phase, ka.mask | kb.mask, std::vector<int>(dim, 0)};
			for (int i = 0; i < dim; ++i)
				k.exps[i] = (i < (int)ka.exps.size() ? ka.exps[i] : 0) +
				            (i < (int)kb.exps.size() ? kb.exps[i] : 0);
			r.add_term(k, s * ca * cb);
		}
	r.enforce(caps);
	return r;
}

CoefficientForm d(const CoefficientForm &w, const Caps &caps)
{
	CoefficientForm r(w.dim());
	for (auto &[k, c] : w.terms())
		for (int i = 0; i < w.dim(); ++i) {
			if (k.exps[i] == 0 || (k.mask & (1u << i)))
				continue;
			FormKey nk = k;
			nk.exps[i] -= 1;
			nk.mask |= 1u << i;
			int s = wedge_sign(1u << i, k.mask);
			r.add_term(nk, c * k.exps[i] * s);
		}
	r.enforce(caps);
	return r;
}

VectorField::VectorField(int dim)
    : comps(dim, CoefficientForm(dim)), vertical(dim)
{}

VectorField VectorField::coordinate(int dim, int i)
{
	VectorField X(dim);
	X.comps[i] = CoefficientForm::constant(dim, 1);
	return X;
}

VectorField VectorField::from(std::vector<CoefficientForm> comps)
{
	VectorField X(static_cast<int>(comps.size()));
	for (size_t i = 0; i < comps.size(); ++i)
		X.comps[i] += comps[i];
	return X;
}

CoefficientForm VectorField::apply(const CoefficientForm &f) const
{
	CoefficientForm r(dim());
	for (int i = 0; i < dim(); ++i)
		r += wedge(comps[i], f.partial(i));
	if (!vertical.is_zero())
		for (auto &[k, c] : f.terms())
			if (k.phase != 0) {
				CoefficientForm t(dim());
				t.add_term(k, c * k.phase);
				r += wedge(vertical, t);
			}
	return r;
}

VectorField VectorField::scaled(const CoefficientForm &g) const
{
	VectorField X(dim());
	for (int i = 0; i < dim(); ++i)
		X.comps[i] = wedge(g, comps[i]);
	X.vertical = wedge(g, vertical);
	return X;
}

VectorField VectorField::horizontal() const
{
	VectorField X = *this;
	X.vertical = CoefficientForm(dim());
	return X;
}

std::string VectorField::str(const BasePatch &patch) const
{
	std::string s = "[";
	for (int i = 0; i < dim(); ++i)
		s += (i ? ", " : "") + comps[i].str(patch);
	return s + "]";
}

CoefficientForm contract(const VectorField &X, const CoefficientForm &w)
{
	int dim = w.dim();
	CoefficientForm r(dim);
	for (auto &[k, c] : w.terms()) {
		int pos = 0;
		for (int i = 0; i < dim; ++i) {
			if (!(k.mask & (1u << i)))
				continue;
			FormKey nk = k;
			nk.mask &= ~(1u << i);
			CoefficientForm t(dim);
			t.add_term(nk, (pos & 1) ? -c : c);
			r += wedge(X.comps[i], t);
			++pos;
		}
	}
	return r;
}

CoefficientForm lie(const VectorField &X, const CoefficientForm &w, const Caps &caps)
{
	CoefficientForm r = d(contract(X, w), caps) + contract(X, d(w, caps));
	if (!X.vertical.is_zero())
		for (auto &[k, c] : w.terms())
			if (k.phase != 0) {
				CoefficientForm t(w.dim());
				t.add_term(k, c * k.phase);
				r += wedge(X.vertical, t);
			}
	r.enforce(caps);
	return r;
}

VectorField bracket(const VectorField &X, const VectorField &Y)
{
	VectorField Z(X.dim());
	for (int i = 0; i < X.dim(); ++i)
		Z.comps[i] = X.apply(Y.comps[i]) - Y.apply(X.comps[i]);
	Z.vertical = X.apply(Y.vertical) - Y.apply(X.vertical);
	return Z;
}

static CoefficientForm graded_scale(const CoefficientForm &w, int odd_sign, const Rational &c)
{
	CoefficientForm r(w.dim());
	for (auto &[k, v] : w.terms())
		r.add_term(k, Rational((k.degree() & 1) ? odd_sign : 1) * c * v);
	return r;
}

CircleForm d(const CircleForm &w)
{
	// d(a e) = da e + (-1)^|a| n a dtheta e ;  d(b dtheta e) = db dtheta e
	CircleForm r;
	r.phase = w.phase;
	r.alpha = d(w.alpha);
	r.beta = d(w.beta) + graded_scale(w.alpha, -1, w.phase);
	return r;
}

CircleForm contract_vertical(const CircleForm &w, const Rational &scale)
{
	CircleForm r;
	r.phase = w.phase;
	r.alpha = graded_scale(w.beta, -1, scale);
	r.beta = CoefficientForm(w.beta.dim());
	return r;
}

} // namespace vcdr
