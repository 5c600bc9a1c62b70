#pragma once

#include "vcdr/coeffring.hpp"

namespace vcdr {

// Connection data of the dual pair of circle bundles over a single base patch.
struct BundleScene {
	BasePatch base;
	CoefficientForm A_bas;    // connection of Z, pulled to the base
	CoefficientForm Ahat_bas; // connection of the dual bundle
	CoefficientForm H3;
	Caps caps;
	std::string name = "scene";

	int dim() const { return base.dim(); }
	// Curvatures: H2 = dAhat_bas, Hhat2 = dA_bas.
	CoefficientForm H2() const { return d(Ahat_bas); }
	CoefficientForm Hhat2() const { return d(A_bas); }

	// Throws SCENE_NOT_CLOSED unless dH3 + Hhat2 ^ H2 = 0 and degrees fit.
	void validate() const;
	BundleScene swapped() const;
	bool trivial() const;

	static BundleScene std2d();
	static BundleScene flat(int dim);
	// Parses `key = value` lines; forms use the expression grammar.
	static BundleScene parse(const std::string &text);
	static BundleScene load(const std::string &path_or_name);
};

} // namespace vcdr
