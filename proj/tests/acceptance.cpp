// Acceptance criteria 1-10, one line each. Exit status 0 iff every criterion passes.
#include "vcdr/checks.hpp"
#include "vcdr/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

using namespace vcdr;

namespace {

struct Outcome {
	bool pass = true;
	std::string detail;
	std::vector<std::string> log;
};

void absorb(Outcome &o, const std::vector<CheckRecord> &rs, const std::string &prefix = "")
{
	for (auto &r : rs) {
		if (r.name.rfind(prefix, 0) != 0)
			continue;
		if (!r.pass) {
			o.pass = false;
			o.log.push_back("FAIL " + r.name + " " + r.witness);
		}
	}
}

size_t total(const std::vector<CheckRecord> &rs)
{
	size_t n = 0;
	for (auto &r : rs)
		n += r.count;
	return n;
}

const CheckRecord *find(const std::vector<CheckRecord> &rs, const std::string &name)
{
	for (auto &r : rs)
		if (r.name == name)
			return &r;
	return nullptr;
}

void require(Outcome &o, const std::vector<CheckRecord> &rs, const std::string &name, size_t at_least)
{
	const CheckRecord *r = find(rs, name);
	if (!r || !r->pass || r->count < at_least) {
		o.pass = false;
		o.log.push_back("missing or short: " + name);
	}
}

int cli(const std::vector<std::string> &args, std::string *out = nullptr)
{
	std::ostringstream o, e;
	int st = cli_main(args, o, e);
	if (out)
		*out = o.str();
	return st;
}

Outcome topological()
{
	Outcome o;
	for (int n = 1; n <= 3; ++n) {
		auto rs = check_topological(n);
		absorb(o, rs);
		CdrPatch p(BasePatch::standard(n));
		const Algebra &A = p.alg();
		Rational jj = A.product(p.J(), p.J(), 1).coefficient({});
		Rational qg = A.product(p.Q(), p.G(), 2).coefficient({});
		if (abs(jj) != n || qg != n) {
			o.pass = false;
			o.log.push_back("central terms n=" + std::to_string(n) + ": JJ " + jj.get_str() + ", QG " + qg.get_str());
		}
		o.detail += (n > 1 ? ", " : "") + ("n=" + std::to_string(n) + " JJ=" + jj.get_str() + " QG=" + qg.get_str());
	}
	return o;
}

Outcome cdr_differential()
{
	Outcome o;
	SweepConfig cfg;
	cfg.samples = 300;
	size_t n = 0;
	for (int dim = 1; dim <= 3; ++dim) {
		CdrPatch p(BasePatch::standard(dim));
		auto rs = check_cdr(p, cfg);
		absorb(o, rs);
		std::string pre = "cdr.n" + std::to_string(dim) + ".";
		for (auto name : {"d2.generators", "d2.samples", "homotopy.generators", "homotopy.samples"})
			require(o, rs, pre + name, std::string(name).ends_with("samples") ? 300 : 1);
		n += total(rs);
	}
	o.detail = std::to_string(n) + " identities, dims 1-3";
	return o;
}

Outcome untwisting(const Session &s)
{
	Outcome o;
	SweepConfig cfg;
	auto rs = check_untwist(s, cfg);
	absorb(o, rs);
	require(o, rs, "untwist.opes", 1);
	o.detail = std::to_string(total(rs)) + " identities on std2d";
	return o;
}

Outcome exotic_consistency(const Session &s)
{
	Outcome o;
	const ExoticPatch &X = s.pair().exotic();
	ConsistencyOptions opt;
	opt.relations = X.relations();
	auto rep = check_consistency(X.alg(), opt);
	if (!rep.pass) {
		o.pass = false;
		o.log.push_back("consistency: " + rep.first());
	}
	for (auto &r : X.relations())
		if (!r.value().is_zero()) {
			o.pass = false;
			o.log.push_back("relation " + r.name);
		}
	o.detail = std::to_string(rep.checks) + " checks, " + std::to_string(opt.relations.size()) + " relations";
	return o;
}

Outcome square_zero(const Session &s)
{
	Outcome o;
	SweepConfig cfg;
	cfg.samples = 500;
	auto rs = check_d2(s, cfg);
	absorb(o, rs, "d2.exotic");
	require(o, rs, "d2.exotic.generators", 1);
	require(o, rs, "d2.exotic.words2", 1);
	require(o, rs, "d2.exotic.samples", 500);
	for (auto name : {"der_squared_gamma", "nder_hat_gamma", "der_squared_s", "quasi_associativity"})
		require(o, rs, std::string("d2.exotic.") + name, 1);
	size_t n = 0;
	for (auto &r : rs)
		if (r.name.rfind("d2.exotic", 0) == 0)
			n += r.count;
	o.detail = std::to_string(n) + " identities";
	return o;
}

Outcome duality(const Session &s)
{
	Outcome o;
	SweepConfig cfg;
	auto rs = check_phi(s, cfg);
	absorb(o, rs);
	require(o, rs, "phi.opes", 1);
	o.detail = std::to_string(total(rs)) + " identities";
	return o;
}

Outcome round_trips(const Session &s)
{
	Outcome o;
	SweepConfig cfg;
	auto rs = check_roundtrip(s, cfg);
	absorb(o, rs);
	require(o, rs, "roundtrip.sigma_hat_tau", 200);
	require(o, rs, "roundtrip.tau_hat_sigma", 200);
	require(o, rs, "tau.vacuum", 1);
	require(o, rs, "tau.A", 1);
	if (auto *f = find(rs, "tau.factorization_defect"))
		o.log.push_back("logged: factorization defect " + f->witness);
	o.detail = std::to_string(total(rs)) + " identities";
	return o;
}

Outcome weight_zero(const Session &s)
{
	Outcome o;
	SweepConfig cfg;
	auto d2 = check_d2(s, cfg);
	absorb(o, d2, "d2.exotic.han_mathai");
	require(o, d2, "d2.exotic.han_mathai", 100);
	auto rs = check_weight_zero(s, cfg);
	absorb(o, rs);
	require(o, rs, "tau.weight_zero_intertwine", 100);
	const CheckRecord *w = find(rs, "tau.positive_weight_witness");
	if (!w || w->witness.empty()) {
		o.pass = false;
		o.log.push_back("no positive weight witness");
	} else
		o.log.push_back("logged: positive weight witness " + w->witness);
	o.detail = "100 triples, 100 weight-zero states";
	return o;
}

Outcome homotopy()
{
	Outcome o;
	SweepConfig cfg;
	auto rs = check_homotopy(BundleScene::flat(2), cfg);
	absorb(o, rs);
	require(o, rs, "homotopy.commutator.generators", 1);
	require(o, rs, "homotopy.commutator.samples", 1);
	require(o, rs, "homotopy.exact", 50);
	require(o, rs, "homotopy.classical_exactness", 20);
	o.detail = std::to_string(total(rs)) + " identities on flat2";
	return o;
}

Outcome determinism(const Session &s)
{
	Outcome o;
	std::string a, b;
	cli({"suite", "all", "--format", "lines", "--seed", "7"}, &a);
	cli({"suite", "all", "--format", "lines", "--seed", "7"}, &b);
	if (a != b || a.empty()) {
		o.pass = false;
		o.log.push_back("suite reports differ between runs");
	}
	SweepConfig cfg;
	auto rs = check_parser(s, cfg, 500);
	absorb(o, rs);
	size_t parsed = total(rs);
	if (parsed < 500) {
		o.pass = false;
		o.log.push_back("parser round trip short");
	}
	int mutations = 0;
	for (Side side : {Side::Cdr, Side::Twisted, Side::Exotic}) {
		int entries = static_cast<int>(s.alg(side).table().size());
		for (int i = 0; i < entries; ++i, ++mutations) {
			std::string spec = std::string(side_name(side)) + ":" + std::to_string(i);
			if (cli({"--mutate", spec, "check", "opes"}) == 0) {
				o.pass = false;
				o.log.push_back("mutation undetected: " + spec);
			}
		}
	}
	o.detail = "parser " + std::to_string(parsed) + ", " + std::to_string(mutations) + " mutations";
	return o;
}

} // namespace

int main()
{
	Session s(BundleScene::std2d());
	struct Criterion {
		int id;
		const char *name;
		double budget;
		std::function<Outcome()> run;
	};
	std::vector<Criterion> cs{
	    {1, "topological algebra", 5, [] { return topological(); }},
	    {2, "cdr differential", 30, [] { return cdr_differential(); }},
	    {3, "untwisting", 10, [&] { return untwisting(s); }},
	    {4, "exotic consistency", 30, [&] { return exotic_consistency(s); }},
	    {5, "square zero", 300, [&] { return square_zero(s); }},
	    {6, "duality isomorphism", 60, [&] { return duality(s); }},
	    {7, "round trips", 60, [&] { return round_trips(s); }},
	    {8, "weight zero agreement", 60, [&] { return weight_zero(s); }},
	    {9, "trivial bundle homotopy", 60, [] { return homotopy(); }},
	    {10, "determinism and parsing", 30, [&] { return determinism(s); }},
	};
	bool all = true;
	for (auto &c : cs) {
		auto t0 = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = c.run();
		} catch (const std::exception &e) {
			o.pass = false;
			o.detail = std::string("threw ") + e.what();
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		if (secs > c.budget) {
			o.pass = false;
			o.log.push_back("over budget");
		}
		all = all && o.pass;
		std::printf("CRITERION %2d %s %-24s %7.2fs  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs,
		            o.detail.c_str());
		for (auto &l : o.log)
			std::printf("    %s\n", l.c_str());
	}
	return all ? 0 : 1;
}
