#include "vcdr/consistency.hpp"

#include <omp.h>

#include <algorithm>

namespace vcdr {

std::vector<Letter> sample_letters(const Algebra &alg, const std::vector<int> &family_indices)
{
	std::vector<Letter> out;
	for (int g = 0; g < alg.num_generators(); ++g) {
		const Generator &gen = alg.gen(g);
		if (!gen.family) {
			out.push_back(alg.letter_of(g));
			continue;
		}
		for (int i : family_indices)
			if (!(gen.exponential && i == 0))
				out.push_back(alg.letter_of(g, i));
	}
	return out;
}

namespace {

struct Task {
	int kind;
	Letter a, b, c;
};

std::string show(const Algebra &alg, const Letter &l) { return alg.letter_str(l); }

std::optional<std::string> run_pair(const Algebra &alg, const Letter &a, const Letter &b)
{
	Poles p = alg.ope(a, b);
	int wa = alg.weight(a), wb = alg.weight(b);
	bool par = alg.odd(a) != alg.odd(b);
	std::string tag = show(alg, a) + "(z)" + show(alg, b) + "(w)";
	for (int k = 0; k < static_cast<int>(p.size()); ++k) {
		if (p[k].is_zero())
			continue;
		if (k >= wa + wb)
			return "locality " + tag + ": pole " + std::to_string(k + 1) + " exceeds weight bound";
		if (alg.weight_bound(p[k]) > wa + wb - k - 1)
			return "weight " + tag + ": pole " + std::to_string(k + 1) + " term above filtration";
		try {
			if (alg.odd(p[k]) != par)
				return "parity " + tag + ": pole " + std::to_string(k + 1);
		} catch (const EngineError &) {
			return "parity " + tag + ": mixed pole " + std::to_string(k + 1);
		}
	}
	if (alg.has_direct(a, b) && alg.has_direct(b, a)) {
		// compare against the skew-symmetric image of b_(n)a
		Poles q = alg.ope(b, a);
		int top = static_cast<int>(q.size());
		bool sg = alg.odd(a) && alg.odd(b);
		for (int n = 0; n < std::max(top, (int)p.size()); ++n) {
			State s;
			for (int j = 0; n + j < top; ++j) {
				Rational c = ((n + j + 1) % 2 == 0) ? 1 : -1;
				if (sg)
					c = -c;
				s.add_scaled(alg.divided_derivative(q[n + j], j), c);
			}
			State have = n < (int)p.size() ? p[n] : State{};
			if (!(have == s))
				return "skew " + tag + ": pole " + std::to_string(n + 1) + " differs by " +
				       alg.str(have - s);
		}
	}
	return std::nullopt;
}

std::optional<std::string> run_rules(const Algebra &alg, const Letter &a, const Letter &g)
{
	State as = State::word(Word{a}), gs = alg.letter(g.gen, g.index);
	int top = alg.weight(a) + alg.weight(g) + 1;
	const Generator &gen = alg.gen(g.gen);
	if (gen.derivative) {
		State dg = alg.derivative(gs);
		for (int n = 0; n <= top; ++n) {
			State lhs = alg.product(as, dg, n);
			State rhs = alg.derivative(alg.product(as, gs, n));
			if (n > 0)
				rhs.add_scaled(alg.product(as, gs, n - 1), n);
			if (!(lhs == rhs))
				return "translation " + show(alg, a) + " on d" + show(alg, g) + " mode " +
				       std::to_string(n) + ": " + alg.str(lhs - rhs);
		}
	}
	return std::nullopt;
}

std::optional<std::string> run_collapse(const Algebra &alg, const Letter &a, const Letter &e1,
                                        const Letter &e2)
{
	State as = State::word(Word{a});
	State s1 = alg.letter(e1.gen, e1.index), s2 = alg.letter(e2.gen, e2.index);
	State joint = alg.letter(e1.gen, e1.index + e2.index);
	int top = alg.weight(a) + alg.weight(e1) + alg.weight(e2);
	bool sg = alg.odd(a) && alg.odd(e1);
	for (int n = 0; n <= top; ++n) {
		State lhs = alg.product(as, joint, n);
		State rhs = alg.nprod(alg.product(as, s1, n), s2);
		rhs.add_scaled(alg.nprod(s1, alg.product(as, s2, n)), sg ? -1 : 1);
		for (int j = 0; j < n; ++j)
			rhs.add_scaled(alg.product(alg.product(as, s1, j), s2, n - 1 - j), binomial(n, j));
		if (!(lhs == rhs))
			return "collapse " + show(alg, a) + " on " + show(alg, e1) + "," + show(alg, e2) +
			       " mode " + std::to_string(n) + ": " + alg.str(lhs - rhs);
	}
	return std::nullopt;
}

std::optional<std::string> run_jacobi(const Algebra &alg, const Letter &a, const Letter &b,
                                      const Letter &c)
{
	State as = alg.letter(a.gen, a.index), bs = alg.letter(b.gen, b.index),
	      cs = alg.letter(c.gen, c.index);
	int top = alg.weight(a) + alg.weight(b) + alg.weight(c);
	bool sg = alg.odd(a) && alg.odd(b);
	for (int m = 0; m < top; ++m)
		for (int n = 0; n < top; ++n) {
			State lhs = alg.product(as, alg.product(bs, cs, n), m);
			lhs.add_scaled(alg.product(bs, alg.product(as, cs, m), n), sg ? 1 : -1);
			State rhs;
			for (int j = 0; j <= m; ++j) {
				State ab = alg.product(as, bs, j);
				if (!ab.is_zero())
					rhs.add_scaled(alg.product(ab, cs, m + n - j), binomial(m, j));
			}
			if (!(lhs == rhs))
				return "jacobi " + show(alg, a) + "," + show(alg, b) + "," + show(alg, c) +
				       " (m=" + std::to_string(m) + ", n=" + std::to_string(n) +
				       "): " + alg.str(lhs - rhs);
		}
	return std::nullopt;
}

} // namespace

ConsistencyReport check_consistency(const Algebra &alg, const ConsistencyOptions &opt)
{
	std::vector<Letter> letters = sample_letters(alg, opt.family_indices);
	std::vector<Task> tasks;
	for (auto &a : letters)
		for (auto &b : letters)
			tasks.push_back({0, a, b, b});
	for (auto &a : letters)
		for (auto &g : letters)
			if (alg.gen(g.gen).derivative)
				tasks.push_back({1, a, g, g});
	for (auto &a : letters)
		for (auto &e1 : letters)
			for (auto &e2 : letters)
				if (alg.gen(e1.gen).exponential && e1.gen == e2.gen &&
				    e1.index + e2.index != 0 && e1 <= e2)
					tasks.push_back({2, a, e1, e2});
	if (opt.jacobi) {
		std::vector<Letter> jl;
		for (auto &l : letters)
			if (opt.jacobi_generators.empty() ||
			    std::find(opt.jacobi_generators.begin(), opt.jacobi_generators.end(), l.gen) !=
			        opt.jacobi_generators.end())
				jl.push_back(l);
		for (auto &a : jl)
			for (auto &b : jl)
				for (auto &c : jl)
					tasks.push_back({3, a, b, c});
	}
	std::vector<std::optional<std::string>> out(tasks.size() + opt.relations.size());
#pragma omp parallel for schedule(dynamic)
	for (long i = 0; i < (long)tasks.size(); ++i) {
		const Task &t = tasks[i];
		try {
			switch (t.kind) {
			case 0: out[i] = run_pair(alg, t.a, t.b); break;
			case 1: out[i] = run_rules(alg, t.a, t.b); break;
			case 2: out[i] = run_collapse(alg, t.a, t.b, t.c); break;
			default: out[i] = run_jacobi(alg, t.a, t.b, t.c); break;
			}
		} catch (const EngineError &e) {
			out[i] = std::string("error ") + e.what();
		}
	}
	for (size_t r = 0; r < opt.relations.size(); ++r) {
		State v = opt.relations[r].value();
		if (!v.is_zero())
			out[tasks.size() + r] = "relation " + opt.relations[r].name + ": " + alg.str(v);
	}
	ConsistencyReport rep;
	rep.checks = out.size();
	for (auto &o : out)
		if (o) {
			rep.pass = false;
			rep.failures.push_back(*o);
		}
	return rep;
}

} // namespace vcdr

namespace vcdr {

std::vector<std::string> ope_defects(const Homomorphism &f, const std::vector<Letter> &letters,
                                     size_t limit)
{
	const Algebra &S = f.source();
	const Algebra &T = f.target();
	std::vector<std::pair<Letter, Letter>> pairs;
	for (auto &a : letters)
		for (auto &b : letters)
			pairs.push_back({a, b});
	std::vector<std::string> out(pairs.size());
#pragma omp parallel for schedule(dynamic)
	for (long i = 0; i < (long)pairs.size(); ++i) {
		auto [a, b] = pairs[i];
		try {
			State sa = S.letter(a.gen, a.index), sb = S.letter(b.gen, b.index);
			State fa = f(sa), fb = f(sb);
			Poles p = S.ope(a, b);
			int top = std::max<int>(p.size(), T.weight_bound(fa) + T.weight_bound(fb) + 1);
			for (int k = 0; k < top; ++k) {
				State want = k < (int)p.size() ? f(p[k]) : State{};
				State got = T.product(fa, fb, k);
				if (!(want == got)) {
					out[i] = S.str(sa) + "_(" + std::to_string(k) + ")" + S.str(sb) + ": " +
					         T.str(got - want);
					break;
				}
			}
		} catch (const EngineError &e) {
			out[i] = std::string("error ") + e.what();
		}
	}
	std::vector<std::string> r;
	for (auto &s : out)
		if (!s.empty() && r.size() < limit)
			r.push_back(s);
	return r;
}

} // namespace vcdr

namespace vcdr {

std::vector<NamedRelation> cartan_relations(const Algebra &alg, const FormBasis &fb,
                                            std::function<State(const VectorField &)> iota,
                                            std::function<State(const VectorField &)> lie)
{
	int n = fb.dim();
	const Algebra *A = &alg;
	const FormBasis *F = &fb;
	CoefficientForm x0 = CoefficientForm::coordinate(n, 0);
	CoefficientForm xl = CoefficientForm::coordinate(n, n - 1);
	CoefficientForm g = wedge(x0, x0) + CoefficientForm::constant(n, 1);
	CoefficientForm h = wedge(x0, xl) - 2 * xl;
	CoefficientForm nu = wedge(xl, CoefficientForm::dcoord(n, 0));
	CoefficientForm om = wedge(x0, CoefficientForm::dcoord(n, n - 1));
	VectorField X = VectorField::coordinate(n, n - 1);
	VectorField gX = X.scaled(g);
	auto emb = [F](const CoefficientForm &w) { return F->embed(w); };
	std::vector<NamedRelation> out;
	out.push_back({"vacuum", [A] { return A->nprod(State::vacuum(), State::vacuum()) - State::vacuum(); }});
	out.push_back({"fg", [=] { return A->nprod(emb(g), emb(h)) - emb(wedge(g, h)); }});
	out.push_back({"nu_omega", [=] { return A->nprod(emb(nu), emb(om)) - emb(wedge(nu, om)); }});
	out.push_back({"iota_gX", [=] { return iota(gX) - A->nprod(emb(g), iota(X)); }});
	out.push_back({"iota_gX_omega", [=] { return A->product(iota(gX), emb(om), 0) - emb(contract(gX, om)); }});
	out.push_back({"L_gX_f", [=] { return A->product(lie(gX), emb(h), 0) - emb(gX.apply(h)); }});
	out.push_back({"L_gX_omega", [=] {
		               return A->product(lie(gX), emb(om), 0) - emb(vcdr::lie(gX, om));
	               }});
	out.push_back({"L_gX_omega_1", [=] { return A->product(lie(gX), emb(om), 1); }});
	out.push_back({"chain_rule", [=] {
		               State r = A->derivative(emb(h));
		               for (int i = 0; i < n; ++i)
			               r -= A->nprod(emb(h.partial(i)), A->derivative(F->coord(i)));
		               return r;
	               }});
	return out;
}

} // namespace vcdr
