#include "vcdr/cdr.hpp"

namespace vcdr {

CdrPatch::CdrPatch(BasePatch base, const std::string &name)
    : base_(std::move(base)), alg_(std::make_unique<Algebra>(name))
{
	int n = base_.dim();
	forms_.alg = alg_.get();
	for (int i = 0; i < n; ++i)
		forms_.x.push_back(alg_->add_generator({base_.coords[i], false, 0, 0}));
	for (int i = 0; i < n; ++i)
		forms_.dx.push_back(alg_->add_generator({"c" + std::to_string(i + 1), true, 0, 1}));
	for (int i = 0; i < n; ++i)
		beta_.push_back(alg_->add_generator({"beta" + std::to_string(i + 1), false, 1, 0}));
	for (int i = 0; i < n; ++i)
		b_.push_back(alg_->add_generator({"b" + std::to_string(i + 1), true, 1, -1}));
	for (int i = 0; i < n; ++i) {
		alg_->set_ope(beta_[i], forms_.x[i], {State::vacuum()});
		alg_->set_ope(b_[i], forms_.dx[i], {State::vacuum()});
	}
	for (int i = 0; i < n; ++i) {
		State dg = alg_->derivative(gamma(i)), dc = alg_->derivative(c(i));
		J_ += alg_->nprod(c(i), b(i));
		Q_ += alg_->nprod(beta(i), c(i));
		G_ += alg_->nprod(b(i), dg);
		L_ += alg_->nprod(beta(i), dg);
		L_ -= alg_->nprod(b(i), dc);
	}
}

State CdrPatch::iota(const VectorField &X) const
{
	State r;
	for (int i = 0; i < dim(); ++i)
		r += alg_->nprod(form(X.comps[i]), b(i));
	return r;
}

State CdrPatch::lieop(const VectorField &X) const { return D(iota(X)); }

std::vector<NamedRelation> CdrPatch::relations() const
{
	int n = dim();
	std::vector<NamedRelation> out;
	CoefficientForm x0 = CoefficientForm::coordinate(n, 0);
	CoefficientForm xl = CoefficientForm::coordinate(n, n - 1);
	CoefficientForm f = wedge(x0, x0) + CoefficientForm::constant(n, 3);
	CoefficientForm g = wedge(x0, xl) - 2 * xl;
	VectorField X = VectorField::coordinate(n, n - 1).scaled(x0);
	out.push_back({"fg", [=, this] {
		               return alg_->nprod(form(f), form(g)) - form(wedge(f, g));
	               }});
	CoefficientForm nu = wedge(xl, CoefficientForm::dcoord(n, 0));
	CoefficientForm om = CoefficientForm::dcoord(n, n - 1);
	out.push_back({"nu_omega", [=, this] {
		               return alg_->nprod(form(nu), form(om)) - form(wedge(nu, om));
	               }});
	out.push_back({"iota_gX", [=, this] {
		               return iota(X.scaled(g)) - alg_->nprod(form(g), iota(X));
	               }});
	out.push_back({"L_gX", [=, this] {
		               return lieop(X.scaled(g)) - alg_->nprod(form(d(g)), iota(X)) -
		                      alg_->nprod(form(g), lieop(X));
	               }});
	out.push_back({"chain_rule", [=, this] {
		               State r = alg_->derivative(form(g));
		               for (int i = 0; i < n; ++i)
			               r -= alg_->nprod(form(g.partial(i)), alg_->derivative(gamma(i)));
		               return r;
	               }});
	return out;
}

std::vector<NamedOpe> topological_opes(const CdrPatch &p)
{
	const Algebra &A = p.alg();
	Rational n = p.dim();
	State L = p.L(), J = p.J(), G = p.G(), Q = p.Q();
	State one = State::vacuum();
	auto dv = [&](const State &s) { return A.derivative(s); };
	return {
	    {"LL", L, L, {dv(L), 2 * L}},
	    {"LJ", L, J, {dv(J), J, -n * one}},
	    {"LG", L, G, {dv(G), 2 * G}},
	    {"LQ", L, Q, {dv(Q), Q}},
	    {"JJ", J, J, {State{}, n * one}},
	    {"GG", G, G, {}},
	    {"QQ", Q, Q, {}},
	    {"JG", J, G, {-G}},
	    {"JQ", J, Q, {Q}},
	    {"QG", Q, G, {L, J, n * one}},
	    {"GQ", G, Q, {L - dv(J), -1 * J, n * one}},
	};
}

static void check_inverse(const CoordinateChange &chg, int n)
{
	if ((int)chg.g.size() != n || (int)chg.f.size() != n)
		throw EngineError("NOT_INVERTIBLE", "coordinate change has wrong arity");
	for (int i = 0; i < n; ++i) {
		if (!(chg.f[i].substitute(chg.g) == CoefficientForm::coordinate(n, i)) ||
		    !(chg.g[i].substitute(chg.f) == CoefficientForm::coordinate(n, i)))
			throw EngineError("NOT_INVERTIBLE",
			                  "f and g are not inverse polynomial maps (component " +
			                      std::to_string(i + 1) + ")");
	}
}

std::unique_ptr<Homomorphism> coordinate_change(const CdrPatch &source, const CdrPatch &target,
                                                const CoordinateChange &chg)
{
	int n = target.dim();
	if (source.dim() != n)
		throw EngineError("PRECONDITION", "coordinate change between patches of different dimension");
	check_inverse(chg, n);
	// images of the generators of the source (new coordinates) in the target
	std::vector<State> img_gamma(n), img_c(n), img_b(n), img_beta(n);
	const Algebra &T = target.alg();
	for (int i = 0; i < n; ++i) {
		img_gamma[i] = target.form(chg.g[i]);
		for (int j = 0; j < n; ++j) {
			img_c[i] += T.nprod(target.form(chg.g[i].partial(j)), target.c(j));
			CoefficientForm dfji = chg.f[j].partial(i).substitute(chg.g);
			img_b[i] += T.nprod(target.form(dfji), target.b(j));
			img_beta[i] += T.nprod(target.beta(j), target.form(dfji));
		}
		for (int k = 0; k < n; ++k)
			for (int l = 0; l < n; ++l) {
				CoefficientForm h = chg.f[k].partial(i).partial(l).substitute(chg.g);
				if (h.is_zero())
					continue;
				for (int r = 0; r < n; ++r) {
					CoefficientForm coef = wedge(h, chg.g[l].partial(r));
					if (coef.is_zero())
						continue;
					img_beta[i] += T.nprod(target.form(coef), T.nprod(target.c(r), target.b(k)));
				}
			}
	}
	const CdrPatch *src = &source;
	auto rule = [=](const Letter &l) -> State {
		for (int i = 0; i < n; ++i) {
			if (l.gen == src->gamma_id(i))
				return img_gamma[i];
			if (l.gen == src->c_id(i))
				return img_c[i];
			if (l.gen == src->b_id(i))
				return img_b[i];
			if (l.gen == src->beta_id(i))
				return img_beta[i];
		}
		throw EngineError("PRECONDITION", "unknown generator in coordinate change");
	};
	return std::make_unique<Homomorphism>(source.alg(), target.alg(), rule);
}

CoordinateChange compose(const CoordinateChange &first, const CoordinateChange &second)
{
	CoordinateChange r;
	for (auto &h : second.g)
		r.g.push_back(h.substitute(first.g));
	for (auto &f : first.f)
		r.f.push_back(f.substitute(second.f));
	return r;
}

} // namespace vcdr
