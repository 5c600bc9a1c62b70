#pragma once

#include "vcdr/checks.hpp"

#include <random>

namespace vt {

using namespace vcdr;

struct Std2d {
	Session s{BundleScene::std2d()};
	const TwistedPatch &T = s.pair().twisted();
	const ExoticPatch &X = s.pair().exotic();
	State tw(const std::string &t) const { return s.parse(t, Side::Twisted); }
	State ex(const std::string &t) const { return s.parse(t, Side::Exotic); }
	State cd(const std::string &t) const { return s.parse(t, Side::Cdr); }
	std::string tstr(const State &a) const { return s.str(a, Side::Twisted); }
	std::string xstr(const State &a) const { return s.str(a, Side::Exotic); }
};

// Flat base patch session of the given dimension.
inline Session flat_session(int dim) { return Session(BundleScene::flat(dim)); }

// Sign of the permutation sorting the concatenated index lists, or 0 on a repeat.
// Counts inversions directly, independent of the bitmask implementation.
inline int sort_sign(std::vector<int> v)
{
	int s = 1;
	for (size_t i = 0; i < v.size(); ++i)
		for (size_t j = i + 1; j < v.size(); ++j) {
			if (v[i] == v[j])
				return 0;
			if (v[i] > v[j])
				s = -s;
		}
	return s;
}

inline std::vector<int> bits(std::uint32_t m)
{
	std::vector<int> v;
	for (int i = 0; i < 32; ++i)
		if (m & (1u << i))
			v.push_back(i);
	return v;
}

inline CoefficientForm function_part(const CoefficientForm &w)
{
	CoefficientForm f(w.dim());
	for (auto &[k, c] : w.terms())
		if (k.mask == 0)
			f.add_term(k, c);
	return f;
}

inline VectorField random_field(int dim, std::mt19937_64 &rng)
{
	VectorField X(dim);
	for (auto &c : X.comps)
		c = function_part(random_form(dim, rng));
	return X;
}

// Borcherds commutator formula for m, n >= 0:
// a_(m)(b_(n)c) - (-1)^{|a||b|} b_(n)(a_(m)c) = sum_j C(m,j) (a_(j)b)_(m+n-j) c.
inline State commutator_defect(const Algebra &A, const State &a, const State &b, const State &c, int m, int n)
{
	int sign = (A.odd(a) && A.odd(b)) ? -1 : 1;
	State lhs = A.product(a, A.product(b, c, n), m) - Rational(sign) * A.product(b, A.product(a, c, m), n);
	for (int j = 0; j <= m; ++j)
		lhs -= binomial(m, j) * A.product(A.product(a, b, j), c, m + n - j);
	return lhs;
}

// Skew-symmetry: b_(n)a = sum_j (-1)^{n+j+1+|a||b|} d^j/j! (a_(n+j)b), n >= 0.
inline State skew_defect(const Algebra &A, const State &a, const State &b, int n)
{
	int p = (A.odd(a) && A.odd(b)) ? 1 : 0;
	State r = A.product(b, a, n);
	int top = A.weight_bound(a) + A.weight_bound(b) + 2;
	for (int j = 0; n + j <= top; ++j) {
		int e = n + j + 1 + p;
		r -= Rational(e % 2 ? -1 : 1) * A.divided_derivative(A.product(a, b, n + j), j);
	}
	return r;
}

// Homogeneous pieces of a state by parity; the identities above need homogeneous inputs.
inline std::vector<State> homogeneous(const Algebra &A, const State &s)
{
	State ev, od;
	for (auto &[w, c] : s.terms())
		(A.odd(w) ? od : ev).add(w, c);
	std::vector<State> out;
	for (State *p : {&ev, &od})
		if (!p->is_zero())
			out.push_back(*p);
	return out;
}

} // namespace vt
