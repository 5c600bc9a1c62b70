#pragma once

#include "vcdr/consistency.hpp"
#include "vcdr/forms.hpp"

#include <memory>

namespace vcdr {

// bc-beta-gamma system on a coordinate patch: gamma^i (the coordinates), c^i, beta^i, b^i.
class CdrPatch
{
  public:
	explicit CdrPatch(BasePatch base, const std::string &name = "cdr");

	const BasePatch &base() const { return base_; }
	const Algebra &alg() const { return *alg_; }
	Algebra &alg_mut() { return *alg_; }
	const FormBasis &forms() const { return forms_; }
	int dim() const { return base_.dim(); }

	int gamma_id(int i) const { return forms_.x[i]; }
	int c_id(int i) const { return forms_.dx[i]; }
	int beta_id(int i) const { return beta_[i]; }
	int b_id(int i) const { return b_[i]; }
	State gamma(int i) const { return alg_->letter(gamma_id(i)); }
	State c(int i) const { return alg_->letter(c_id(i)); }
	State beta(int i) const { return alg_->letter(beta_id(i)); }
	State b(int i) const { return alg_->letter(b_id(i)); }

	State form(const CoefficientForm &w) const { return forms_.embed(w); }
	State iota(const VectorField &X) const;
	State lieop(const VectorField &X) const;

	const State &J() const { return J_; }
	const State &Q() const { return Q_; }
	const State &G() const { return G_; }
	const State &L() const { return L_; }

	State D(const State &a) const { return alg_->product(Q_, a, 0); }
	State G0(const State &a) const { return alg_->product(G_, a, 1); }
	State L0(const State &a) const { return alg_->product(L_, a, 1); }
	State J0(const State &a) const { return alg_->product(J_, a, 0); }

	// Relations of the coordinate-free presentation evaluated on sample data.
	std::vector<NamedRelation> relations() const;

  private:
	BasePatch base_;
	std::unique_ptr<Algebra> alg_;
	FormBasis forms_;
	std::vector<int> beta_, b_;
	State J_, Q_, G_, L_;
};

struct NamedOpe {
	std::string name;
	State a, b;
	Poles expected;
};

// The rank-n topological vertex algebra relations, expected values in terms of L, J, G, Q.
std::vector<NamedOpe> topological_opes(const CdrPatch &p);

// Polynomial change of coordinates gt = g(gamma) with inverse gamma = f(gt).
struct CoordinateChange {
	std::vector<CoefficientForm> g;
	std::vector<CoefficientForm> f;
};

// phi_g from the algebra in the new coordinates (source) to the old one (target).
// Throws NOT_INVERTIBLE when f and g are not mutually inverse.
std::unique_ptr<Homomorphism> coordinate_change(const CdrPatch &source, const CdrPatch &target,
                                                const CoordinateChange &chg);
CoordinateChange compose(const CoordinateChange &first, const CoordinateChange &second);

} // namespace vcdr
