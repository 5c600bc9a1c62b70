#pragma once

#include "vcdr/algebra.hpp"

namespace vcdr {

// Identifies the weight-zero letters of an algebra that carry functions, base
// one-forms and (optionally) Fourier phases.
struct FormBasis {
	const Algebra *alg = nullptr;
	std::vector<int> x;
	std::vector<int> dx;
	int phase_family = -1;
	// phase n of a form is stored as family index phase_sign * n
	int phase_sign = 1;

	int dim() const { return static_cast<int>(x.size()); }
	State embed(const CoefficientForm &f) const;
	// Only succeeds on states built from x, dx and phase letters without derivatives.
	std::optional<CoefficientForm> extract(const State &s) const;
	State function(const CoefficientForm &f) const { return embed(f); }
	State dcoord(int i) const { return alg->letter(dx[i]); }
	State coord(int i) const { return alg->letter(x[i]); }
};

} // namespace vcdr
