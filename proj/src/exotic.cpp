#include "vcdr/exotic.hpp"

#include "vcdr/twisted.hpp"

namespace vcdr {

ExoticPatch::ExoticPatch(const BundleScene &scene, Table table)
    : scene_(scene), alg_(std::make_unique<Algebra>("exotic"))
{
	scene_.validate();
	int n = dim();
	Algebra &G = *alg_;
	forms_.alg = alg_.get();
	S_ = G.add_generator({"s", false, 0, 0, true, true});
	G.gen_mut(S_).label = [](int k) { return "s(" + std::to_string(k) + ")"; };
	for (int i = 0; i < n; ++i)
		forms_.x.push_back(G.add_generator({scene_.base.coords[i], false, 0, 0}));
	for (int i = 0; i < n; ++i)
		forms_.dx.push_back(G.add_generator({"d" + scene_.base.coords[i], true, 0, 1}));
	forms_.phase_family = S_;
	Gamma_ = G.add_generator({"GammaA", false, 1, 0});
	for (int i = 0; i < n; ++i)
		iota_.push_back(G.add_generator({"iota(" + scene_.base.coords[i] + ")", true, 1, -1}));
	LA_ = G.add_generator({"LA", false, 1, 0});
	for (int i = 0; i < n; ++i)
		L_.push_back(G.add_generator({"Lie(" + scene_.base.coords[i] + ")", false, 1, 0}));
	Ahat_ = G.add_generator({"Ahat", true, 0, 1});
	iAhat_ = G.add_generator({"iAhat", true, 1, -1});

	auto f = [this](const CoefficientForm &w) { return form(w); };
	auto X = [n](int i) { return VectorField::coordinate(n, i); };
	std::vector<CoefficientForm> as;
	for (int i = 0; i < n; ++i)
		as.push_back(contract(X(i), scene_.A_bas));

	const Algebra *Gp = alg_.get();
	State theta_dot = G.letter(Gamma_);
	for (int i = 0; i < n; ++i)
		theta_dot -= G.nprod(f(as[i]), G.derivative(G.letter(forms_.x[i])));
	int S = S_;
	G.gen_mut(S_).derivative = [Gp, S, theta_dot](int k) {
		return Rational(-k) * Gp->nprod(Gp->letter(S, k), theta_dot);
	};

	bool listed = table == Table::Listed;
	State one = State::vacuum();
	State Ah = G.letter(Ahat_), LA = G.letter(LA_);
	CoefficientForm H3 = scene_.H3, H2 = scene_.H2(), Hh2 = scene_.Hhat2();
	auto ii = [&](int i, int j, const CoefficientForm &w) { return contract(X(i), contract(X(j), w)); };
	auto li = [&](int i, int j, const CoefficientForm &w) { return vcdr::lie(X(i), contract(X(j), w)); };
	auto il = [&](int i, int j, const CoefficientForm &w) { return contract(X(i), vcdr::lie(X(j), w)); };
	for (int i = 0; i < n; ++i) {
		G.set_ope(iota_[i], forms_.dx[i], {one});
		G.set_ope(L_[i], forms_.x[i], {one});
	}
	G.set_ope(iAhat_, Ahat_, {one});
	G.set_ope(LA_, Gamma_, {State{}, one});
	for (int i = 0; i < n; ++i) {
		G.set_ope(L_[i], iAhat_, {f(contract(X(i), Hh2))});
		for (int j = 0; j < n; ++j) {
			G.set_ope(L_[i], iota_[j], {f(ii(i, j, H3)) + G.nprod(Ah, f(ii(i, j, Hh2)))});
			State lij = f(li(i, j, H3)) - f(il(i, j, H3)) + G.nprod(f(li(i, j, Hh2)), Ah) -
			            G.nprod(f(il(i, j, Hh2)), Ah) + G.nprod(LA, f(ii(i, j, Hh2)));
			if (listed)
				lij += G.nprod(f(Hh2), f(ii(i, j, H2))) + G.nprod(f(H2), f(ii(i, j, Hh2)));
			G.set_ope(L_[i], L_[j], {lij});
		}
	}
	int LAi = LA_;
	std::vector<int> Ls = L_;
	const FormBasis *fb = &forms_;
	G.add_rule([=](const Letter &a, const Letter &b) -> std::optional<Poles> {
		if (b.gen != S)
			return std::nullopt;
		State sb = State::word(Word{b});
		if (a.gen == LAi)
			return Poles{Rational(-b.index) * sb};
		for (size_t i = 0; i < Ls.size(); ++i)
			if (a.gen == Ls[i]) {
				if (listed)
					return Poles{};
				return Poles{fb->alg->nprod(fb->embed(Rational(b.index) * as[i]), sb)};
			}
		return std::nullopt;
	});
	xi_ = xi_in(forms_, scene_);
	for (int i = 0; i < n; ++i)
		G.set_ope(L_[i], Gamma_, {-1 * G.product(G.letter(iota_[i]), xi_, 0)});

	Hhat_ = f(H3) + G.nprod(Ah, f(Hh2));
	State iAh = G.letter(iAhat_);
	fields_[0] = -1 * G.nprod(Ah, f(Hh2));
	fields_[1] = G.nprod(f(H2), iAh);
	fields_[2] = -1 * G.nprod(iAh, LA);
	fields_[3] = f(H3);
	fields_[4] = G.nprod(iAh, LA);
	fields_[5] = G.nprod(f(H2), iAh);
	DZ_ = std::make_unique<Derivation>(
	    G, [this](const Letter &l) { return DZ_on_generator(l); }, true);
}

ExoticPatch::~ExoticPatch() = default;

State ExoticPatch::iota(const VectorField &X) const
{
	State r;
	for (int i = 0; i < dim(); ++i)
		r += alg_->nprod(form(X.comps[i]), gen(iota_[i]));
	return r;
}

State ExoticPatch::lie(const VectorField &X) const
{
	State r;
	for (int i = 0; i < dim(); ++i)
		r += alg_->nprod(form(X.comps[i]), gen(L_[i])) +
		     alg_->nprod(form(d(X.comps[i])), gen(iota_[i]));
	return r;
}

State ExoticPatch::DZ_on_generator(const Letter &l) const
{
	const Algebra &G = *alg_;
	int n = dim();
	for (int i = 0; i < n; ++i) {
		if (l.gen == forms_.x[i])
			return gen(forms_.dx[i]);
		if (l.gen == forms_.dx[i])
			return State{};
		VectorField X = VectorField::coordinate(n, i);
		if (l.gen == iota_[i])
			return gen(L_[i]) - form(contract(X, scene_.H3));
		if (l.gen == L_[i])
			return form(vcdr::lie(X, scene_.H3)) +
			       G.nprod(form(scene_.H2()), form(contract(X, scene_.Hhat2()))) +
			       G.nprod(form(scene_.Hhat2()), form(contract(X, scene_.H2())));
	}
	if (l.gen == iAhat_)
		return form(scene_.Hhat2());
	if (l.gen == Ahat_)
		return gen(LA_);
	if (l.gen == LA_)
		return State{};
	if (l.gen == Gamma_)
		return G.derivative(gen(iAhat_)) - xi_;
	if (l.gen == S_) {
		Rational k = l.index;
		return -k * G.nprod(gen(iAhat_), S(l.index)) + k * G.nprod(form(scene_.A_bas), S(l.index));
	}
	throw EngineError("PRECONDITION", "unknown generator");
}

State ExoticPatch::DZ(const State &a) const { return (*DZ_)(a); }

State ExoticPatch::component(const State &a, int which) const
{
	switch (which) {
	case 0:
	case 1:
	case 2:
	case 3:
		return alg_->product(fields_[which], a, 0);
	case 4:
	case 5:
		return alg_->product(fields_[which], a, 1);
	case 6:
		return alg_->nprod(Hhat_, a);
	}
	throw EngineError("PRECONDITION", "component index must be 0..6");
}

State ExoticPatch::D_der(const State &a) const
{
	State r = DZ(a);
	for (int k = 0; k <= 3; ++k)
		r += component(a, k);
	return r;
}

State ExoticPatch::D_nder(const State &a) const { return component(a, 4) + component(a, 5); }

State ExoticPatch::apply_full(const State &a) const { return D_der(a) + D_nder(a) + D_hat(a); }

int ExoticPatch::weight_bound(const State &a) const
{
	return a.is_zero() ? 0 : std::max(0, alg_->weight_bound(a));
}

State ExoticPatch::weight_zero_part(const State &a) const
{
	State r;
	for (auto &[w, c] : a.terms())
		if (alg_->weight(w) == 0)
			r.add_scaled(State::word(w), c);
	return r;
}

State ExoticPatch::weight_zero(const CoefficientForm &w0, const CoefficientForm &w1, int n) const
{
	return alg_->nprod(form(w0) + alg_->nprod(gen(Ahat_), form(w1)), S(n));
}

std::pair<CoefficientForm, CoefficientForm> ExoticPatch::split_weight_zero(const State &a, int n) const
{
	CoefficientForm w0(dim()), w1(dim());
	for (auto &[w, c] : a.terms()) {
		Word rest;
		bool hat = false;
		int k = 0;
		for (const Letter &l : w) {
			if (l.gen == S_)
				k += l.index;
			else if (l.gen == Ahat_ && l.der == 0)
				hat = true;
			else
				rest.push_back(l);
		}
		auto om = forms_.extract(State::word(rest));
		if (k != n || !om)
			throw EngineError("PRECONDITION", "not a weight-zero element of sector " + std::to_string(n));
		if (!hat)
			w0 += c * *om;
		else // the word reads :om Ahat: = (-1)^{|om|} :Ahat om:
			w1 += ((om->homogeneous_degree() & 1) ? -c : c) * *om;
	}
	return {w0, w1};
}

std::vector<NamedRelation> ExoticPatch::relations() const
{
	auto out = cartan_relations(
	    *alg_, forms_, [this](const VectorField &X) { return iota(X); },
	    [this](const VectorField &X) { return lie(X); });
	out.push_back({"xi_iAhat", [this] { return alg_->product(gen(iAhat_), xi_, 0); }});
	out.push_back({"xi_LA", [this] { return alg_->product(gen(LA_), xi_, 0); }});
	out.push_back({"s_mul", [this] { return alg_->nprod(S(2), S(-3)) - S(-1); }});
	return out;
}

std::pair<CoefficientForm, CoefficientForm> hm_differential(const BundleScene &scene,
                                                            const CoefficientForm &w0,
                                                            const CoefficientForm &w1, int n)
{
	Rational k = n;
	CoefficientForm H2 = scene.H2(), Hh2 = scene.Hhat2();
	CoefficientForm r0 = d(w0) + k * wedge(scene.A_bas, w0) + wedge(H2, w1) - k * w1 +
	                     wedge(scene.H3, w0);
	CoefficientForm r1 = -d(w1) - k * wedge(scene.A_bas, w1) - wedge(scene.H3, w1) + wedge(Hh2, w0);
	return {r0, r1};
}

} // namespace vcdr
