#pragma once

#include "vcdr/consistency.hpp"
#include "vcdr/forms.hpp"
#include "vcdr/scene.hpp"

#include <array>
#include <memory>

namespace vcdr {

// Exotic twisted algebra on the dual side: sections s(n) (weight 0), x^i, dx^i, Ahat,
// Gamma^A, iota_Ahat, iota_i, L_A, L_i.
class ExoticPatch
{
  public:
	enum class Table { Derived, Listed };

	explicit ExoticPatch(const BundleScene &scene, Table table = Table::Derived);
	~ExoticPatch();

	const Algebra &alg() const { return *alg_; }
	Algebra &alg_mut() { return *alg_; }
	const FormBasis &forms() const { return forms_; }
	const BundleScene &scene() const { return scene_; }
	int dim() const { return scene_.dim(); }

	int S_id() const { return S_; }
	int Ahat_id() const { return Ahat_; }
	int Gamma_id() const { return Gamma_; }
	int iAhat_id() const { return iAhat_; }
	int LA_id() const { return LA_; }
	int iota_id(int i) const { return iota_[i]; }
	int L_id(int i) const { return L_[i]; }

	State form(const CoefficientForm &w) const { return forms_.embed(w); }
	State S(int n) const { return alg_->letter(S_, n); }
	State gen(int id) const { return alg_->letter(id); }
	State iota(const VectorField &X) const;
	State lie(const VectorField &X) const;
	const State &xi() const { return xi_; }
	// Hhat = H^3 + :Ahat Hhat^2:
	const State &Hhat() const { return Hhat_; }

	// D_Zhat on generators, extended as an odd derivation.
	State DZ(const State &a) const;
	State DZ_on_generator(const Letter &l) const;
	// Components D^0 ... D^6.
	State component(const State &a, int which) const;
	State D_der(const State &a) const;
	State D_nder(const State &a) const;
	State D_hat(const State &a) const { return component(a, 6); }
	State apply_full(const State &a) const;

	// Filtration weight (generator bounds, +1 per derivative); 0 for the vacuum.
	int weight_bound(const State &a) const;
	// Words of filtration weight 0.
	State weight_zero_part(const State &a) const;
	// :(w0 + Ahat w1) s(n):
	State weight_zero(const CoefficientForm &w0, const CoefficientForm &w1, int n) const;
	// Inverse of weight_zero on the weight-zero subspace of sector n.
	std::pair<CoefficientForm, CoefficientForm> split_weight_zero(const State &a, int n) const;

	std::vector<NamedRelation> relations() const;

  private:
	BundleScene scene_;
	std::unique_ptr<Algebra> alg_;
	FormBasis forms_;
	int S_ = -1, Ahat_ = -1, Gamma_ = -1, iAhat_ = -1, LA_ = -1;
	std::vector<int> iota_, L_;
	State xi_, Hhat_;
	std::array<State, 6> fields_; // fields whose modes give D^0 ... D^5
	std::unique_ptr<Derivation> DZ_;
};

// Classical exotic differential (nabla^{L^n} - n iota_Ahat + Hhat) on (w0 + Ahat w1) s^n.
std::pair<CoefficientForm, CoefficientForm> hm_differential(const BundleScene &scene,
                                                            const CoefficientForm &w0,
                                                            const CoefficientForm &w1, int n);

} // namespace vcdr
