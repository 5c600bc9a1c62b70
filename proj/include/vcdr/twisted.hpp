#pragma once

#include "vcdr/consistency.hpp"
#include "vcdr/forms.hpp"
#include "vcdr/scene.hpp"

#include <memory>

namespace vcdr {

// Untwisted bc-beta-gamma system on V x T in the coordinates (x^i, theta):
// letters e^{k theta}, gamma^i, c^i, c^theta, p = d gamma^theta, beta^i, beta^theta, b^i, b^theta.
class TwistedModel
{
  public:
	explicit TwistedModel(const BundleScene &scene);

	const Algebra &alg() const { return *alg_; }
	Algebra &alg_mut() { return *alg_; }
	const FormBasis &forms() const { return forms_; }
	const BundleScene &scene() const { return scene_; }
	int dim() const { return scene_.dim(); }

	int E_id() const { return E_; }
	int cth_id() const { return cth_; }
	int p_id() const { return p_; }
	int beta_id(int i) const { return beta_[i]; }
	int bth_id() const { return bth_; }
	int betath_id() const { return betath_; }
	int b_id(int i) const { return b_[i]; }

	State form(const CoefficientForm &w) const { return forms_.embed(w); }
	State E(int k) const { return alg_->letter(E_, k); }
	const State &A() const { return A_; }
	const State &H() const { return H_; }
	const State &Q() const { return Q_; }
	const State &G() const { return G_; }
	const State &Gamma() const { return Gamma_; }
	// xi = dA/dz - D(Gamma); lives in the subalgebra of base forms.
	const State &xi() const { return xi_; }

	State D(const State &a) const { return alg_->product(Q_, a, 0); }
	State D_H(const State &a) const { return D(a) + alg_->nprod(H_, a); }

  private:
	BundleScene scene_;
	std::unique_ptr<Algebra> alg_;
	FormBasis forms_;
	int E_ = -1, cth_ = -1, p_ = -1, betath_ = -1, bth_ = -1;
	std::vector<int> beta_, b_;
	State A_, H_, Q_, G_, Gamma_, xi_;
};

// Twisted patch in the abstract presentation: e^{k theta} (label ph(k)), x^i, dx^i, A,
// Gamma^A, iota_A, iota_i, L_A, L_i, where iota_i and L_i belong to horizontal lifts of
// the coordinate fields.
class TwistedPatch
{
  public:
	enum class Table { Derived, Listed };
	// Reading of the term :H^2 (iota_X Hhat^2): in D(L_X).
	enum class LieReading { Form, Field };

	explicit TwistedPatch(const BundleScene &scene, Table table = Table::Derived);
	~TwistedPatch();

	const Algebra &alg() const { return *alg_; }
	Algebra &alg_mut() { return *alg_; }
	const FormBasis &forms() const { return forms_; }
	const BundleScene &scene() const { return scene_; }
	const TwistedModel &model() const { return *model_; }
	int dim() const { return scene_.dim(); }

	int E_id() const { return E_; }
	int A_id() const { return A_; }
	int Gamma_id() const { return Gamma_; }
	int iA_id() const { return iA_; }
	int LA_id() const { return LA_; }
	int iota_id(int i) const { return iota_[i]; }
	int L_id(int i) const { return L_[i]; }

	State form(const CoefficientForm &w) const { return forms_.embed(w); }
	State E(int k) const { return alg_->letter(E_, k); }
	State gen(int id) const { return alg_->letter(id); }
	State iota(const VectorField &X) const;
	State lie(const VectorField &X) const;
	const State &xi() const { return xi_; }
	// H = H^3 + :A H^2:
	const State &H() const { return H_; }

	// The differential on generators, extended as an odd derivation.
	State D(const State &a, LieReading r = LieReading::Form) const;
	State D_H(const State &a) const { return D(a) + alg_->nprod(H_, a); }
	State D_on_generator(const Letter &l, LieReading r = LieReading::Form) const;

	// Eigenvalue n part for the circle action (L_A - H^2)_(0).
	State fourier_project(const State &a, int n) const;
	State sector_operator(const State &a) const;

	// Untwisting dictionary from the bc-beta-gamma model and its inverse.
	State untwist(const State &a) const;
	State retwist(const State &a) const;
	const Homomorphism &untwist_map() const { return *untwist_; }
	const Homomorphism &retwist_map() const { return *retwist_; }

	std::vector<NamedRelation> relations() const;

  private:
	void build_table(Table t);

	BundleScene scene_;
	std::unique_ptr<TwistedModel> model_;
	std::unique_ptr<Algebra> alg_;
	FormBasis forms_;
	int E_ = -1, A_ = -1, Gamma_ = -1, iA_ = -1, LA_ = -1;
	std::vector<int> iota_, L_;
	State xi_, H_;
	std::unique_ptr<Derivation> D_form_, D_field_;
	std::unique_ptr<Homomorphism> untwist_, retwist_;
};

// xi^A of the scene, computed in the bc-beta-gamma model and written in the letters of fb.
State xi_in(const FormBasis &fb, const BundleScene &scene);

} // namespace vcdr
