#include "vcdr/twisted.hpp"

namespace vcdr {

namespace {

std::string phase_label(const std::string &f, int k) { return f + "(" + std::to_string(k) + ")"; }

// Basic forms of the scene as states of an algebra with the given form basis.
struct SceneForms {
	const BundleScene &sc;
	const FormBasis &fb;
	int n() const { return sc.dim(); }
	VectorField X(int i) const { return VectorField::coordinate(n(), i); }
	CoefficientForm a(int i) const { return contract(X(i), sc.A_bas); }
	State operator()(const CoefficientForm &w) const { return fb.embed(w); }
};

} // namespace

TwistedModel::TwistedModel(const BundleScene &scene)
    : scene_(scene), alg_(std::make_unique<Algebra>("twisted-model"))
{
	scene_.validate();
	int n = dim();
	Algebra &G = *alg_;
	forms_.alg = alg_.get();
	E_ = G.add_generator({"E", false, 0, 0, true, true});
	G.gen_mut(E_).label = [](int k) { return phase_label("e", k); };
	for (int i = 0; i < n; ++i)
		forms_.x.push_back(G.add_generator({scene_.base.coords[i], false, 0, 0}));
	for (int i = 0; i < n; ++i)
		forms_.dx.push_back(G.add_generator({"d" + scene_.base.coords[i], true, 0, 1}));
	forms_.phase_family = E_;
	cth_ = G.add_generator({"ctheta", true, 0, 1});
	p_ = G.add_generator({"p", false, 1, 0});
	for (int i = 0; i < n; ++i)
		beta_.push_back(G.add_generator({"beta" + std::to_string(i + 1), false, 1, 0}));
	betath_ = G.add_generator({"betatheta", false, 1, 0});
	for (int i = 0; i < n; ++i)
		b_.push_back(G.add_generator({"b" + std::to_string(i + 1), true, 1, -1}));
	bth_ = G.add_generator({"btheta", true, 1, -1});

	for (int i = 0; i < n; ++i) {
		G.set_ope(beta_[i], forms_.x[i], {State::vacuum()});
		G.set_ope(b_[i], forms_.dx[i], {State::vacuum()});
	}
	G.set_ope(bth_, cth_, {State::vacuum()});
	G.set_ope(betath_, p_, {State{}, State::vacuum()});
	int E = E_, bt = betath_, p = p_;
	G.add_rule([E, bt](const Letter &a, const Letter &b) -> std::optional<Poles> {
		if (a.gen == bt && b.gen == E)
			return Poles{Rational(b.index) * State::word(Word{b})};
		return std::nullopt;
	});
	const Algebra *Gp = alg_.get();
	G.gen_mut(E_).derivative = [Gp, E, p](int k) {
		return Rational(k) * Gp->nprod(Gp->letter(E, k), Gp->letter(p));
	};

	SceneForms f{scene_, forms_};
	A_ = G.letter(cth_) + f(scene_.A_bas);
	H_ = f(scene_.H3) + G.nprod(A_, f(scene_.H2()));
	for (int i = 0; i < n; ++i) {
		Q_ += G.nprod(G.letter(beta_[i]), G.letter(forms_.dx[i]));
		G_ += G.nprod(G.letter(b_[i]), G.derivative(G.letter(forms_.x[i])));
	}
	Q_ += G.nprod(G.letter(betath_), G.letter(cth_));
	G_ += G.nprod(G.letter(bth_), G.letter(p_));
	Gamma_ = G.product(G_, A_, 0);
	xi_ = G.derivative(A_) - D(Gamma_);
}

TwistedPatch::TwistedPatch(const BundleScene &scene, Table table)
    : scene_(scene), model_(std::make_unique<TwistedModel>(scene)),
      alg_(std::make_unique<Algebra>("twisted"))
{
	int n = dim();
	Algebra &G = *alg_;
	forms_.alg = alg_.get();
	E_ = G.add_generator({"ph", false, 0, 0, true, true});
	G.gen_mut(E_).label = [](int k) { return phase_label("ph", k); };
	for (int i = 0; i < n; ++i)
		forms_.x.push_back(G.add_generator({scene_.base.coords[i], false, 0, 0}));
	for (int i = 0; i < n; ++i)
		forms_.dx.push_back(G.add_generator({"d" + scene_.base.coords[i], true, 0, 1}));
	forms_.phase_family = E_;
	Gamma_ = G.add_generator({"GammaA", false, 1, 0});
	for (int i = 0; i < n; ++i)
		iota_.push_back(G.add_generator({"iota(" + scene_.base.coords[i] + ")", true, 1, -1}));
	LA_ = G.add_generator({"LA", false, 1, 0});
	for (int i = 0; i < n; ++i)
		L_.push_back(G.add_generator({"Lie(" + scene_.base.coords[i] + ")", false, 1, 0}));
	A_ = G.add_generator({"A", true, 0, 1});
	iA_ = G.add_generator({"iA", true, 1, -1});

	SceneForms f{scene_, forms_};
	const Algebra *Gp = alg_.get();
	State theta_dot = G.letter(Gamma_);
	for (int i = 0; i < n; ++i)
		theta_dot -= G.nprod(f(f.a(i)), G.derivative(G.letter(forms_.x[i])));
	int E = E_;
	G.gen_mut(E_).derivative = [Gp, E, theta_dot](int k) {
		return Rational(k) * Gp->nprod(Gp->letter(E, k), theta_dot);
	};
	H_ = f(scene_.H3) + G.nprod(G.letter(A_), f(scene_.H2()));
	build_table(table);

	// untwisting dictionary and its inverse
	const TwistedModel &M = *model_;
	const Algebra &MA = M.alg();
	SceneForms mf{scene_, M.forms()};
	std::map<int, State> fwd, back;
	for (int i = 0; i < n; ++i) {
		fwd[M.forms().x[i]] = G.letter(forms_.x[i]);
		fwd[M.forms().dx[i]] = G.letter(forms_.dx[i]);
		back[forms_.x[i]] = MA.letter(M.forms().x[i]);
		back[forms_.dx[i]] = MA.letter(M.forms().dx[i]);
	}
	State Abas = f(scene_.A_bas), H2 = f(scene_.H2());
	State A = G.letter(A_), iA = G.letter(iA_), LA = G.letter(LA_);
	fwd[M.cth_id()] = A - Abas;
	fwd[M.bth_id()] = iA;
	fwd[M.betath_id()] = LA - H2;
	fwd[M.p_id()] = theta_dot;
	back[A_] = M.A();
	back[iA_] = MA.letter(M.bth_id());
	back[LA_] = MA.letter(M.betath_id()) + mf(scene_.H2());
	back[Gamma_] = M.Gamma();
	for (int i = 0; i < n; ++i) {
		CoefficientForm ai = f.a(i);
		CoefficientForm iH3 = contract(f.X(i), scene_.H3);
		CoefficientForm iH2 = contract(f.X(i), scene_.H2());
		fwd[M.b_id(i)] = G.letter(iota_[i]) + G.nprod(f(ai), iA);
		fwd[M.beta_id(i)] = G.letter(L_[i]) - f(iH3) + G.nprod(A, f(iH2)) +
		                    G.nprod(f(d(ai)), iA) + G.nprod(f(ai), LA - H2);
		State bth = MA.letter(M.bth_id()), betath = MA.letter(M.betath_id());
		back[iota_[i]] = MA.letter(M.b_id(i)) - MA.nprod(mf(ai), bth);
		back[L_[i]] = MA.letter(M.beta_id(i)) - MA.nprod(mf(ai), betath) -
		              MA.nprod(mf(d(ai)), bth) + mf(iH3) - MA.nprod(M.A(), mf(iH2));
	}
	int ME = M.E_id(), TE = E_;
	untwist_ = std::make_unique<Homomorphism>(MA, G, [fwd, ME, TE, Gp](const Letter &l) {
		if (l.gen == ME)
			return Gp->letter(TE, l.index);
		return fwd.at(l.gen);
	});
	retwist_ = std::make_unique<Homomorphism>(G, MA, [back, ME, TE, &MA](const Letter &l) {
		if (l.gen == TE)
			return MA.letter(ME, l.index);
		return back.at(l.gen);
	});

	auto dgen = [this](LieReading r) {
		return std::make_unique<Derivation>(
		    *alg_, [this, r](const Letter &l) { return D_on_generator(l, r); }, true);
	};
	D_form_ = dgen(LieReading::Form);
	D_field_ = dgen(LieReading::Field);
}

TwistedPatch::~TwistedPatch() = default;

void TwistedPatch::build_table(Table table)
{
	int n = dim();
	Algebra &G = *alg_;
	SceneForms f{scene_, forms_};
	State one = State::vacuum();
	State A = G.letter(A_), iA = G.letter(iA_), LA = G.letter(LA_);
	CoefficientForm H3 = scene_.H3, H2 = scene_.H2(), Hh2 = scene_.Hhat2();
	auto X = [&](int i) { return f.X(i); };
	auto ii = [&](int i, int j, const CoefficientForm &w) { return contract(X(i), contract(X(j), w)); };
	auto li = [&](int i, int j, const CoefficientForm &w) { return vcdr::lie(X(i), contract(X(j), w)); };
	auto il = [&](int i, int j, const CoefficientForm &w) { return contract(X(i), vcdr::lie(X(j), w)); };

	for (int i = 0; i < n; ++i) {
		G.set_ope(iota_[i], forms_.dx[i], {one});
		G.set_ope(L_[i], forms_.x[i], {one});
	}
	G.set_ope(iA_, A_, {one});
	G.set_ope(LA_, Gamma_, {State{}, one});
	for (int i = 0; i < n; ++i) {
		G.set_ope(L_[i], A_, {f(contract(X(i), Hh2))});
		G.set_ope(L_[i], iA_, {f(contract(X(i), H2))});
		G.set_ope(LA_, iota_[i], {-1 * f(contract(X(i), H2))});
		if (table == Table::Listed)
			G.set_ope(LA_, L_[i], {-1 * f(contract(X(i), H2))});
		else
			G.set_ope(LA_, L_[i], {-1 * f(vcdr::lie(X(i), H2))});
		for (int j = 0; j < n; ++j) {
			G.set_ope(L_[i], iota_[j],
			          {f(ii(i, j, H3)) + G.nprod(A, f(ii(i, j, H2))) + G.nprod(f(ii(i, j, Hh2)), iA)});
			G.set_ope(L_[i], L_[j],
			          {f(li(i, j, H3)) - f(il(i, j, H3)) + G.nprod(f(Hh2), f(ii(i, j, H2))) -
			           G.nprod(A, f(li(i, j, H2))) + G.nprod(A, f(il(i, j, H2))) +
			           G.nprod(f(li(i, j, Hh2)), iA) - G.nprod(f(il(i, j, Hh2)), iA) +
			           G.nprod(LA, f(ii(i, j, Hh2)))});
		}
	}
	int E = E_, LAi = LA_;
	std::vector<int> Ls = L_;
	std::vector<CoefficientForm> as;
	for (int i = 0; i < n; ++i)
		as.push_back(f.a(i));
	const FormBasis *fb = &forms_;
	bool listed = table == Table::Listed;
	G.add_rule([=](const Letter &a, const Letter &b) -> std::optional<Poles> {
		if (b.gen != E)
			return std::nullopt;
		State eb = State::word(Word{b});
		if (a.gen == LAi)
			return Poles{Rational(b.index) * eb};
		for (size_t i = 0; i < Ls.size(); ++i)
			if (a.gen == Ls[i]) {
				if (listed)
					return Poles{};
				return Poles{fb->alg->nprod(fb->embed(Rational(-b.index) * as[i]), eb)};
			}
		return std::nullopt;
	});

	xi_ = xi_in(forms_, scene_);
	for (int i = 0; i < n; ++i)
		G.set_ope(L_[i], Gamma_, {-1 * G.product(G.letter(iota_[i]), xi_, 0)});
}

State TwistedPatch::iota(const VectorField &X) const
{
	State r;
	for (int i = 0; i < dim(); ++i)
		r += alg_->nprod(form(X.comps[i]), gen(iota_[i]));
	return r;
}

State TwistedPatch::lie(const VectorField &X) const
{
	State r;
	for (int i = 0; i < dim(); ++i)
		r += alg_->nprod(form(X.comps[i]), gen(L_[i])) +
		     alg_->nprod(form(d(X.comps[i])), gen(iota_[i]));
	return r;
}

State TwistedPatch::D_on_generator(const Letter &l, LieReading r) const
{
	const Algebra &G = *alg_;
	SceneForms f{scene_, forms_};
	int n = dim();
	for (int i = 0; i < n; ++i) {
		if (l.gen == forms_.x[i])
			return G.letter(forms_.dx[i]);
		if (l.gen == forms_.dx[i])
			return State{};
		VectorField X = f.X(i);
		if (l.gen == iota_[i])
			return gen(L_[i]) - f(contract(X, scene_.H3)) +
			       G.nprod(gen(A_), f(contract(X, scene_.H2())));
		if (l.gen == L_[i]) {
			State mid = r == LieReading::Form
			                ? G.nprod(f(scene_.H2()), f(contract(X, scene_.Hhat2())))
			                : G.nprod(f(scene_.H2()), G.nprod(gen(iota_[i]), f(scene_.Hhat2())));
			return f(vcdr::lie(X, scene_.H3)) + mid +
			       G.nprod(gen(A_), f(vcdr::lie(X, scene_.H2())));
		}
	}
	if (l.gen == iA_)
		return gen(LA_) - f(scene_.H2());
	if (l.gen == A_)
		return f(scene_.Hhat2());
	if (l.gen == LA_)
		return State{};
	if (l.gen == Gamma_)
		return G.derivative(gen(A_)) - xi_;
	if (l.gen == E_)
		return Rational(l.index) * G.nprod(gen(A_) - f(scene_.A_bas), E(l.index));
	throw EngineError("PRECONDITION", "unknown generator");
}

State TwistedPatch::D(const State &a, LieReading r) const
{
	return r == LieReading::Form ? (*D_form_)(a) : (*D_field_)(a);
}

State TwistedPatch::sector_operator(const State &a) const
{
	return alg_->product(gen(LA_) - form(scene_.H2()), a, 0);
}

State TwistedPatch::fourier_project(const State &a, int n) const
{
	if (scene_.caps.phase >= 0 && std::abs(n) > scene_.caps.phase)
		throw cap_exceeded("sector index above fourier_cap");
	State r;
	for (auto &[w, c] : a.terms()) {
		int k = 0;
		for (const Letter &l : w)
			if (l.gen == E_)
				k += l.index;
		if (k == n)
			r.add_scaled(State::word(w), c);
	}
	return r;
}

State TwistedPatch::untwist(const State &a) const { return (*untwist_)(a); }
State TwistedPatch::retwist(const State &a) const { return (*retwist_)(a); }

State xi_in(const FormBasis &fb, const BundleScene &scene)
{
	TwistedModel M(scene);
	std::map<int, int> lm;
	for (int i = 0; i < scene.dim(); ++i) {
		lm[M.forms().x[i]] = fb.x[i];
		lm[M.forms().dx[i]] = fb.dx[i];
	}
	Homomorphism to_base(M.alg(), *fb.alg, [&](const Letter &l) {
		auto it = lm.find(l.gen);
		if (it == lm.end())
			throw EngineError("PRECONDITION", "xi leaves the base form subalgebra");
		return fb.alg->letter(it->second);
	});
	return to_base(M.xi());
}

std::vector<NamedRelation> TwistedPatch::relations() const
{
	auto out = cartan_relations(
	    *alg_, forms_, [this](const VectorField &X) { return iota(X); },
	    [this](const VectorField &X) { return lie(X); });
	out.push_back({"xi_iA", [this] { return alg_->product(gen(iA_), xi_, 0); }});
	out.push_back({"xi_LA", [this] { return alg_->product(gen(LA_), xi_, 0); }});
	out.push_back({"D_xi", [this] { return D(xi_) - alg_->derivative(form(scene_.Hhat2())); }});
	return out;
}

} // namespace vcdr
