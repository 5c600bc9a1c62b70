#include "vcdr/tduality.hpp"

namespace vcdr {

ModuleMap::ModuleMap(const Algebra &src, const Algebra &dst, State vacuum_image, Dictionary dict)
    : src_(src), dst_(dst), vac_(std::move(vacuum_image)), dict_(std::move(dict))
{}

State ModuleMap::operator()(const State &mu) const
{
	State r;
	for (auto &[w, c] : mu.terms())
		r.add_scaled(on_word(w), c);
	return r;
}

State ModuleMap::on_word(const Word &w) const
{
	if (w.empty())
		return vac_;
	{
		std::lock_guard lk(mu_);
		auto it = cache_.find(w);
		if (it != cache_.end())
			return it->second;
	}
	Letter g = w[0];
	int j = g.der;
	g.der = 0;
	State r = generator_mode(g, -1 - j, State::word(Word(w.begin() + 1, w.end())));
	r *= factorial(j);
	std::lock_guard lk(mu_);
	cache_.emplace(w, r);
	return r;
}

State ModuleMap::generator_mode(const Letter &g, int m, const State &mu) const
{
	Entry e = dict_(g);
	State r = dst_.product(e.image, (*this)(mu), m + e.shift);
	if (src_.odd(g))
		r *= -1;
	if (!e.rest.is_zero())
		r += mode(e.rest, m, mu);
	return r;
}

State ModuleMap::mode(const Letter &g, int m, const State &mu) const
{
	if (g.der == 0)
		return generator_mode(g, m, mu);
	Letter g0 = g;
	g0.der = 0;
	Rational c = falling(m, g.der);
	if (c == 0)
		return {};
	if (g.der & 1)
		c = -c;
	State r = generator_mode(g0, m - g.der, mu);
	r *= c;
	return r;
}

// (:a Y:)_(m) mu = sum_j a_(-1-j) Y_(m+j) mu + (-1)^{|a||Y|} sum_j Y_(m-1-j) a_(j) mu
State ModuleMap::mode(const State &a, int m, const State &mu) const
{
	State r;
	int wmu = src_.weight_bound(mu);
	for (auto &[u, c] : a.terms()) {
		State t;
		if (u.empty()) {
			if (m == -1)
				t = (*this)(mu);
		} else if (u.size() == 1) {
			t = mode(u[0], m, mu);
		} else {
			const Letter &l = u[0];
			State Y = State::word(Word(u.begin() + 1, u.end()));
			int wy = src_.weight(Word(u.begin() + 1, u.end()));
			for (int j = 0; m + j < wy + wmu; ++j) {
				State inner = src_.product(Y, mu, m + j);
				if (!inner.is_zero())
					t += mode(l, -1 - j, inner);
			}
			bool sgn = src_.odd(l) && src_.odd(Y);
			State lt = State::word({l});
			for (int j = 0; j < src_.weight(l) + wmu; ++j) {
				State inner = src_.product(lt, mu, j);
				if (inner.is_zero())
					continue;
				State s = mode(Y, m - 1 - j, inner);
				t.add_scaled(s, sgn ? -1 : 1);
			}
		}
		r.add_scaled(t, c);
	}
	return r;
}

static CoefficientForm contract_i(const BundleScene &sc, int i, const CoefficientForm &w)
{
	return contract(VectorField::coordinate(sc.dim(), i), w);
}

DualityPair::DualityPair(const BundleScene &scene, TauConvention conv, TwistedPatch::Table tt,
                         ExoticPatch::Table et)
    : scene_(scene), conv_(conv), T_(scene, tt), X_(scene, et)
{
	const Algebra &TA = T_.alg();
	const Algebra &XA = X_.alg();
	int n = scene_.dim();
	int esign = conv == TauConvention::Phi ? -1 : 1;
	CoefficientForm H2 = scene_.H2();

	std::map<int, State> fwd, back;
	std::vector<State> N(n), M(n), Trest(n), Xrest(n);
	for (int i = 0; i < n; ++i) {
		fwd[T_.forms().x[i]] = X_.forms().coord(i);
		fwd[T_.forms().dx[i]] = X_.forms().dcoord(i);
		fwd[T_.iota_id(i)] = X_.gen(X_.iota_id(i));
		back[X_.forms().x[i]] = T_.forms().coord(i);
		back[X_.forms().dx[i]] = T_.forms().dcoord(i);
		back[X_.iota_id(i)] = T_.gen(T_.iota_id(i));
		CoefficientForm iH2 = contract_i(scene_, i, H2), iH3 = contract_i(scene_, i, scene_.H3);
		fwd[T_.L_id(i)] = X_.gen(X_.L_id(i)) - XA.nprod(X_.gen(X_.iAhat_id()), X_.form(iH2));
		back[X_.L_id(i)] = T_.gen(T_.L_id(i)) + TA.nprod(T_.gen(T_.A_id()), T_.form(iH2));
		N[i] = X_.gen(X_.L_id(i)) - X_.form(iH3);
		M[i] = T_.gen(T_.L_id(i)) - T_.form(iH3) + TA.nprod(T_.gen(T_.A_id()), T_.form(iH2));
		Trest[i] = T_.form(iH3) - TA.nprod(T_.gen(T_.A_id()), T_.form(iH2));
		Xrest[i] = X_.form(iH3);
	}
	fwd[T_.Gamma_id()] = X_.gen(X_.Gamma_id());
	fwd[T_.A_id()] = X_.gen(X_.iAhat_id());
	fwd[T_.iA_id()] = X_.gen(X_.Ahat_id());
	fwd[T_.LA_id()] = X_.gen(X_.LA_id()) + X_.form(H2);
	back[X_.Gamma_id()] = T_.gen(T_.Gamma_id());
	back[X_.iAhat_id()] = T_.gen(T_.A_id());
	back[X_.Ahat_id()] = T_.gen(T_.iA_id());
	back[X_.LA_id()] = T_.gen(T_.LA_id()) - T_.form(H2);

	int E = T_.E_id(), S = X_.S_id();
	phi_ = std::make_unique<Homomorphism>(TA, XA, [this, fwd, E, esign](const Letter &l) {
		if (l.gen == E)
			return X_.S(esign * l.index);
		return fwd.at(l.gen);
	});
	psi_ = std::make_unique<Homomorphism>(XA, TA, [this, back, S, esign](const Letter &l) {
		if (l.gen == S)
			return T_.E(esign * l.index);
		return back.at(l.gen);
	});

	// tau: A_(m) -> iAhat_(m+1), iA_(m) -> Ahat_(m-1); L_A and L_i split into a
	// dictionary part and a composite remainder.
	std::map<int, ModuleMap::Entry> tdict, sdict;
	for (auto &[g, img] : fwd)
		tdict[g] = {img, 0, {}};
	tdict[T_.A_id()].shift = 1;
	tdict[T_.iA_id()].shift = -1;
	tdict[T_.LA_id()] = {X_.gen(X_.LA_id()), 0, T_.form(H2)};
	for (int i = 0; i < n; ++i)
		tdict[T_.L_id(i)] = {N[i], 0, Trest[i]};
	for (auto &[g, img] : back)
		sdict[g] = {img, 0, {}};
	sdict[X_.iAhat_id()].shift = -1;
	sdict[X_.Ahat_id()].shift = 1;
	for (int i = 0; i < n; ++i)
		sdict[X_.L_id(i)] = {M[i], 0, Xrest[i]};

	tau_ = std::make_unique<ModuleMap>(TA, XA, X_.gen(X_.Ahat_id()),
	                                   [this, tdict, E, esign](const Letter &l) {
		                                   if (l.gen == E)
			                                   return ModuleMap::Entry{X_.S(esign * l.index), 0, {}};
		                                   return tdict.at(l.gen);
	                                   });
	sigma_ = std::make_unique<ModuleMap>(XA, TA, T_.gen(T_.A_id()),
	                                     [this, sdict, S, esign](const Letter &l) {
		                                     if (l.gen == S)
			                                     return ModuleMap::Entry{T_.E(esign * l.index), 0, {}};
		                                     return sdict.at(l.gen);
	                                     });

	for (int i = 0; i < n; ++i)
		gm_ += XA.nprod(X_.gen(X_.iota_id(i)), XA.derivative(X_.forms().coord(i)));
	ag_ = XA.nprod(X_.gen(X_.Ahat_id()), X_.gen(X_.Gamma_id()));
}

State DualityPair::G0hat(const State &a) const
{
	if (!scene_.trivial())
		throw EngineError("SCENE_NOT_TRIVIAL", "homotopy needs flat connections and zero flux");
	const Algebra &XA = X_.alg();
	return XA.product(gm_, a, 1) + XA.product(ag_, a, 0);
}

State DualityPair::weight_operator(const State &a) const
{
	State r;
	for (auto &[w, c] : a.terms())
		r.add(w, c * X_.alg().weight(w));
	return r;
}

CircleForm tau_classical(const CoefficientForm &l0, const CoefficientForm &l1)
{
	return CircleForm{-l1, -l0, 0};
}

ExactnessCertificate classical_exactness(const CoefficientForm &l0, const CoefficientForm &l1, int n)
{
	if (n == 0)
		throw EngineError("PRECONDITION", "sector 0 has no primitive of this form");
	ExactnessCertificate cert;
	cert.omega = CircleForm{l0, l1, -n};
	CircleForm dw = d(cert.omega);
	if (!dw.alpha.is_zero() || !dw.beta.is_zero())
		throw EngineError("PRECONDITION", "omega is not closed: need dl0 = 0 and dl1 = n l0");
	// l1 e^{-n theta} / n, with the sign of d(a e) = ... + (-1)^|a| (-n) a dtheta e
	CoefficientForm p(l1.dim());
	for (auto &[k, c] : l1.terms())
		p.add_term(k, c / n * ((k.degree() & 1) ? 1 : -1));
	cert.primitive = CircleForm{p, CoefficientForm(l1.dim()), -n};
	cert.primitive_ok = d(cert.primitive) == cert.omega;
	cert.tau_n = tau_classical(l0, l1);
	cert.tau_n.phase = n;
	// tau_n lives on a trivial bundle; its differential has no connection term
	CircleForm flat = cert.tau_n;
	flat.phase = 0;
	CircleForm dt = d(flat), it = contract_vertical(flat, n);
	cert.tau_closed = (dt.alpha - it.alpha).is_zero() && (dt.beta - it.beta).is_zero();
	return cert;
}

} // namespace vcdr
