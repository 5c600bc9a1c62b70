#pragma once

#include "vcdr/exotic.hpp"
#include "vcdr/twisted.hpp"

namespace vcdr {

// Which exotic sector e^{k theta} is sent to: s(-k), consistent with phi, or s(k).
enum class TauConvention { Phi, Sector };

// Module map built from a mode dictionary: tau(1) = vacuum image and
// tau(g_(m) mu) = (-1)^{|g|} image(g)_(m + shift) tau(mu) + tau(rest_(m) mu), where a
// generator that is not weight homogeneous is split as g = (dictionary part) + rest.
class ModuleMap
{
  public:
	struct Entry {
		State image;
		int shift = 0;
		State rest; // composite in the source algebra, possibly zero
	};
	using Dictionary = std::function<Entry(const Letter &)>;

	ModuleMap(const Algebra &src, const Algebra &dst, State vacuum_image, Dictionary dict);

	State operator()(const State &mu) const;
	// g_(m) mu for a single letter g (derivatives allowed).
	State mode(const Letter &g, int m, const State &mu) const;
	State mode(const State &a, int m, const State &mu) const;

  private:
	State on_word(const Word &w) const;
	State generator_mode(const Letter &g, int m, const State &mu) const;

	const Algebra &src_;
	const Algebra &dst_;
	State vac_;
	Dictionary dict_;
	mutable std::mutex mu_;
	mutable std::unordered_map<Word, State, WordHash> cache_;
};

class DualityPair
{
  public:
	explicit DualityPair(const BundleScene &scene, TauConvention conv = TauConvention::Phi,
	                     TwistedPatch::Table tt = TwistedPatch::Table::Derived,
	                     ExoticPatch::Table et = ExoticPatch::Table::Derived);

	const BundleScene &scene() const { return scene_; }
	const TwistedPatch &twisted() const { return T_; }
	const ExoticPatch &exotic() const { return X_; }
	TauConvention convention() const { return conv_; }
	TwistedPatch &twisted_mut() { return T_; }
	ExoticPatch &exotic_mut() { return X_; }

	State phi(const State &a) const { return (*phi_)(a); }
	State psi_hat(const State &a) const { return (*psi_)(a); }
	const Homomorphism &phi_map() const { return *phi_; }
	const Homomorphism &psi_map() const { return *psi_; }
	State tau(const State &a) const { return (*tau_)(a); }
	State sigma_hat(const State &a) const { return (*sigma_)(a); }
	const ModuleMap &tau_map() const { return *tau_; }
	const ModuleMap &sigma_map() const { return *sigma_; }

	// Contracting homotopy of the exotic differential when bundles and fluxes are trivial.
	State G0hat(const State &a) const;
	// Conformal weight operator on the exotic side.
	State weight_operator(const State &a) const;

  private:
	BundleScene scene_;
	TauConvention conv_;
	TwistedPatch T_;
	ExoticPatch X_;
	std::unique_ptr<Homomorphism> phi_, psi_;
	std::unique_ptr<ModuleMap> tau_, sigma_;
	State gm_, ag_;
};

// Closed-form weight-zero map on a trivial scene: (l0 + l1 dtheta) e^{-n theta} -> -l0 dthetahat - l1.
CircleForm tau_classical(const CoefficientForm &l0, const CoefficientForm &l1);

struct ExactnessCertificate {
	CircleForm omega;     // (l0 + l1 dtheta) e^{-n theta}
	CircleForm primitive; // l1 e^{-n theta} / n
	CircleForm tau_n;
	bool primitive_ok = false;
	bool tau_closed = false; // (d - n iota_vhat) tau_n = 0
};

// Throws PRECONDITION unless dl0 = 0, dl1 - n l0 = 0 and n != 0.
ExactnessCertificate classical_exactness(const CoefficientForm &l0, const CoefficientForm &l1, int n);

} // namespace vcdr
