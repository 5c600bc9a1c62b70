#include "vcdr/cli.hpp"

#include "vcdr/checks.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace vcdr {

namespace {

struct Options {
	std::string scene = "std2d";
	bool scene_given = false;
	int dim = 0;
	std::uint64_t seed = 7;
	int samples = 200;
	int weight_cap = -1;
	std::string tau = "phi";
	std::string format = "text";
	std::string algebra; // cdr, except twisted for d
	std::string mutate;
	int mode = 0;
	int component = -1;
	bool plain = false;
	std::vector<std::string> exprs;
	std::string what;
};

const std::vector<std::string> &named_fields(Side s)
{
	static const std::vector<std::string> cdr{"L", "J", "G", "Q"};
	static const std::vector<std::string> tw{"H", "xi"};
	static const std::vector<std::string> ex{"Hhat", "xi"};
	return s == Side::Cdr ? cdr : s == Side::Twisted ? tw : ex;
}

// A pole as a multiple of the vacuum or of a named field when possible.
std::string pole_str(const Session &s, Side side, const State &p)
{
	const Algebra &A = s.alg(side);
	auto scaled = [](const Rational &c, const std::string &name) {
		if (c == 1)
			return name;
		if (c == -1)
			return "-" + name;
		return c.get_str() + "*" + name;
	};
	if (p.size() == 1 && p.terms().begin()->first.empty())
		return p.terms().begin()->second.get_str();
	for (const std::string &name : named_fields(side)) {
		auto f = s.context(side).symbol(name);
		if (!f || f->is_zero())
			continue;
		for (auto &[field, label] : {std::pair{*f, name}, std::pair{A.derivative(*f), "del(" + name + ")"}}) {
			if (field.is_zero())
				continue;
			const auto &[w, c] = *field.terms().begin();
			Rational ratio = p.coefficient(w) / c;
			if (ratio != 0 && p == ratio * field)
				return scaled(ratio, label);
		}
	}
	return p.size() == 1 ? A.str(p) : "(" + A.str(p) + ")";
}

void enforce_weight(const Algebra &A, const State &a, int cap)
{
	if (cap >= 0 && A.weight_bound(a) > cap)
		throw cap_exceeded("weight " + std::to_string(A.weight_bound(a)) + " above weight_cap " +
		                   std::to_string(cap));
}

void mutate(Session &s, const std::string &spec)
{
	auto colon = spec.find(':');
	if (colon == std::string::npos)
		throw EngineError("USAGE", "--mutate expects side:index");
	Side side = parse_side(spec.substr(0, colon));
	int index = std::stoi(spec.substr(colon + 1));
	auto &table = s.alg_mut(side).table_mut();
	if (table.empty())
		throw EngineError("USAGE", "nothing to mutate");
	auto it = table.begin();
	std::advance(it, ((index % (int)table.size()) + (int)table.size()) % (int)table.size());
	for (State &p : it->second)
		if (!p.is_zero()) {
			p *= 2;
			return;
		}
	it->second.assign(1, State::vacuum());
}

int report(const std::vector<CheckRecord> &rs, const Options &o, std::ostream &out)
{
	out << (o.format == "lines" ? format_lines(rs) : format_text(rs));
	return all_pass(rs) ? 0 : 1;
}

int run(const std::string &cmd, const Options &o, std::ostream &out)
{
	BundleScene scene = o.dim > 0 && !o.scene_given ? BundleScene::flat(o.dim) : BundleScene::load(o.scene);
	if (o.dim > 0 && scene.dim() != o.dim)
		throw EngineError("USAGE", "--dim disagrees with the scene dimension");
	int cap = o.weight_cap >= 0 ? o.weight_cap : scene.caps.weight;
	TauConvention conv = o.tau == "paper" ? TauConvention::Sector : TauConvention::Phi;
	Session s(scene, conv);
	if (!o.mutate.empty())
		mutate(s, o.mutate);
	SweepConfig cfg;
	cfg.seed = o.seed;
	cfg.samples = o.samples;
	if (o.weight_cap >= 0)
		cfg.weight_cap = o.weight_cap;
	bool lines = o.format == "lines";

	auto parse_on = [&](Side side, const std::string &text) {
		State a = s.parse(text, side);
		enforce_weight(s.alg(side), a, cap);
		return a;
	};
	auto emit = [&](Side side, const State &r) {
		enforce_weight(s.alg(side), r, cap);
		out << (lines ? "RESULT " : "") << s.str(r, side) << '\n';
		return 0;
	};

	Side side = parse_side(!o.algebra.empty() ? o.algebra : cmd == "d" ? "twisted" : "cdr");
	if (cmd == "ope") {
		const Algebra &A = s.alg(side);
		State a = parse_on(side, o.exprs.at(0)), b = parse_on(side, o.exprs.at(1));
		int top = A.weight_bound(a) + A.weight_bound(b);
		std::vector<std::string> parts;
		for (int k = top; k >= 0; --k) {
			State p = A.product(a, b, k);
			if (p.is_zero())
				continue;
			if (lines)
				out << "POLE " << k + 1 << ' ' << A.str(p) << '\n';
			else
				parts.push_back(pole_str(s, side, p) + " (z-w)^-" + std::to_string(k + 1));
		}
		if (!lines) {
			std::string line;
			for (size_t i = 0; i < parts.size(); ++i) {
				const std::string &t = parts[i];
				if (i == 0)
					line = t;
				else if (t[0] == '-')
					line += " - " + t.substr(1);
				else
					line += " + " + t;
			}
			out << (parts.empty() ? "0" : line) << '\n';
		}
		return 0;
	}
	if (cmd == "prod") {
		const Algebra &A = s.alg(side);
		return emit(side, A.product(parse_on(side, o.exprs.at(0)), parse_on(side, o.exprs.at(1)), o.mode));
	}
	if (cmd == "normalize")
		return emit(side, parse_on(side, o.exprs.at(0)));
	if (cmd == "d") {
		if (side == Side::Cdr)
			return emit(side, s.cdr().D(parse_on(side, o.exprs.at(0))));
		const TwistedPatch &T = s.pair().twisted();
		State a = parse_on(Side::Twisted, o.exprs.at(0));
		return emit(Side::Twisted, o.plain ? T.D(a) : T.D_H(a));
	}
	if (cmd == "dhat") {
		const ExoticPatch &X = s.pair().exotic();
		State a = parse_on(Side::Exotic, o.exprs.at(0));
		if (o.component >= 0)
			return emit(Side::Exotic, o.component == 7 ? X.DZ(a) : X.component(a, o.component));
		return emit(Side::Exotic, X.apply_full(a));
	}
	if (cmd == "tdualize")
		return emit(Side::Exotic, s.pair().tau(parse_on(Side::Twisted, o.exprs.at(0))));
	if (cmd == "sigma")
		return emit(Side::Twisted, s.pair().sigma_hat(parse_on(Side::Exotic, o.exprs.at(0))));
	if (cmd == "roundtrip")
		return report(check_roundtrip(s, cfg), o, out);
	if (cmd == "check") {
		std::vector<CheckRecord> rs;
		if (o.what == "d2") {
			rs = check_d2(s, cfg);
			auto c = check_cdr(s.cdr(), cfg);
			rs.insert(rs.end(), c.begin(), c.end());
		} else if (o.what == "opes")
			rs = check_opes(s, cfg);
		else if (o.what == "untwist")
			rs = check_untwist(s, cfg);
		else if (o.what == "homotopy")
			rs = check_homotopy(o.scene_given ? scene : BundleScene::flat(scene.dim()), cfg);
		else if (o.what == "phi")
			rs = check_phi(s, cfg);
		else if (o.what == "weight-zero")
			rs = check_weight_zero(s, cfg);
		else if (o.what == "parser")
			rs = check_parser(s, cfg);
		sort_records(rs);
		return report(rs, o, out);
	}
	if (cmd == "suite")
		return report(suite_all(s, cfg), o, out);
	throw EngineError("USAGE", "unknown command " + cmd);
}

int status_of(const EngineError &e)
{
	return e.code() == "CAP_EXCEEDED" ? 3 : 2;
}

} // namespace

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	Options o;
	CLI::App app{"exact vertex algebra engine for chiral de Rham complexes and T-duality", "vcdr"};
	app.require_subcommand(1);
	app.add_option("--scene", o.scene, "scene file, std2d or flatN")->each([&](const std::string &) {
		o.scene_given = true;
	});
	app.add_option("--dim", o.dim, "base dimension of a flat scene")->check(CLI::Range(1, 16));
	app.add_option("--seed", o.seed, "sampling seed");
	app.add_option("--samples", o.samples, "samples per sweep")->check(CLI::Range(1, 1000000));
	app.add_option("--weight-cap", o.weight_cap, "largest filtration weight")->check(CLI::Range(0, 64));
	app.add_option("--tau-convention", o.tau, "sector convention of tau")
	    ->check(CLI::IsMember({"phi", "paper"}));
	app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "lines"}));
	app.add_option("--algebra", o.algebra, "algebra for ope, prod, normalize (default cdr) and d (default twisted)")
	    ->check(CLI::IsMember({"cdr", "twisted", "exotic"}));
	app.add_option("--mutate", o.mutate)->group("");
	app.fallthrough();

	auto two = [&](CLI::App *c) { c->add_option("a", o.exprs)->required()->expected(2); };
	auto one = [&](CLI::App *c) { c->add_option("a", o.exprs)->required()->expected(1); };
	two(app.add_subcommand("ope", "singular part of a(z)b(w)"));
	auto *prod = app.add_subcommand("prod", "a_(k) b");
	prod->add_option("-k", o.mode, "mode index")->required()->allow_extra_args(false);
	two(prod);
	one(app.add_subcommand("normalize", "normal form of an expression"));
	auto *dcmd = app.add_subcommand("d", "twisted differential D_H (D with --plain; Q_(0) on cdr)");
	dcmd->add_flag("--plain", o.plain, "omit the flux term");
	one(dcmd);
	auto *dhat = app.add_subcommand("dhat", "exotic differential");
	dhat->add_option("--component", o.component, "0-6 for D^k, 7 for D_Zhat")->check(CLI::Range(0, 7));
	one(dhat);
	one(app.add_subcommand("tdualize", "tau from the twisted to the exotic side"));
	one(app.add_subcommand("sigma", "sigma_hat from the exotic to the twisted side"));
	app.add_subcommand("roundtrip", "sigma_hat tau = -Id and tau_hat sigma = -Id");
	app.add_subcommand("check", "named identity sweep")
	    ->add_option("what", o.what)
	    ->required()
	    ->check(CLI::IsMember({"d2", "opes", "untwist", "homotopy", "phi", "weight-zero", "parser"}));
	app.add_subcommand("suite", "every check")->add_option("what", o.what)->required()->check(
	    CLI::IsMember({"all"}));

	std::vector<std::string> rev(args.rbegin(), args.rend());
	try {
		app.parse(rev);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e, out, err);
		return code == 0 ? 0 : 2;
	}
	std::string cmd = app.get_subcommands().front()->get_name();
	try {
		return run(cmd, o, out);
	} catch (const EngineError &e) {
		err << "error: " << e.what() << '\n';
		return status_of(e);
	} catch (const std::exception &e) {
		err << "error: " << e.what() << '\n';
		return 2;
	}
}

} // namespace vcdr
