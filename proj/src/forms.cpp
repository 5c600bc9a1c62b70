#include "vcdr/forms.hpp"

namespace vcdr {

State FormBasis::embed(const CoefficientForm &f) const
{
	State r;
	for (auto &[k, c] : f.terms()) {
		Word raw;
		for (int i = 0; i < dim(); ++i)
			for (int e = 0; e < k.exps[i]; ++e)
				raw.push_back(alg->letter_of(x[i]));
		for (int i = 0; i < dim(); ++i)
			if (k.mask & (1u << i))
				raw.push_back(alg->letter_of(dx[i]));
		if (k.phase != 0) {
			if (phase_family < 0)
				throw EngineError("PRECONDITION", "algebra has no Fourier phases");
			raw.push_back(alg->letter_of(phase_family, phase_sign * k.phase));
		}
		r.add_scaled(alg->normalize(raw), c);
	}
	return r;
}

std::optional<CoefficientForm> FormBasis::extract(const State &s) const
{
	CoefficientForm out(dim());
	for (auto &[w, c] : s.terms()) {
		FormKey k{0, 0, std::vector<int>(dim(), 0)};
		int sign = 1;
		for (const Letter &l : w) {
			if (l.der != 0)
				return std::nullopt;
			bool hit = false;
			for (int i = 0; i < dim() && !hit; ++i) {
				if (l.gen == x[i]) {
					k.exps[i] += 1;
					hit = true;
				} else if (l.gen == dx[i]) {
					int sg = wedge_sign(k.mask, 1u << i);
					if (sg == 0)
						return std::nullopt;
					sign *= sg;
					k.mask |= 1u << i;
					hit = true;
				}
			}
			if (!hit && phase_family >= 0 && l.gen == phase_family) {
				k.phase += l.index * phase_sign;
				hit = true;
			}
			if (!hit)
				return std::nullopt;
		}
		out.add_term(k, sign * c);
	}
	return out;
}

} // namespace vcdr
