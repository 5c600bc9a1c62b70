#include "vcdr/scene.hpp"

#include "vcdr/expr.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace vcdr {

void BundleScene::validate() const
{
	auto check_deg = [](const CoefficientForm &w, int deg, const char *name) {
		if (!w.is_zero() && w.homogeneous_degree() != deg)
			throw EngineError("SCENE_NOT_CLOSED", std::string(name) + " must be a " +
			                                          std::to_string(deg) + "-form");
		if (w.max_abs_phase() != 0)
			throw EngineError("SCENE_NOT_CLOSED", std::string(name) + " must be basic");
	};
	check_deg(A_bas, 1, "A_bas");
	check_deg(Ahat_bas, 1, "Ahat_bas");
	check_deg(H3, 3, "H3");
	CoefficientForm c = d(H3) + wedge(Hhat2(), H2());
	if (!c.is_zero())
		throw EngineError("SCENE_NOT_CLOSED", "dH3 + Hhat2 ^ H2 = " + c.str(base));
}

BundleScene BundleScene::swapped() const
{
	BundleScene s = *this;
	std::swap(s.A_bas, s.Ahat_bas);
	s.name = name + "^";
	return s;
}

bool BundleScene::trivial() const
{
	return H2().is_zero() && Hhat2().is_zero() && H3.is_zero();
}

BundleScene BundleScene::std2d()
{
	BundleScene s;
	s.base = BasePatch::standard(2);
	s.A_bas = CoefficientForm::monomial(2, 1, {1, 0}, 0b10);
	s.Ahat_bas = CoefficientForm::monomial(2, -1, {0, 1}, 0b01);
	s.H3 = CoefficientForm(2);
	s.caps = Caps{8, 4, 6};
	s.name = "std2d";
	return s;
}

BundleScene BundleScene::flat(int dim)
{
	BundleScene s;
	s.base = BasePatch::standard(dim);
	s.A_bas = CoefficientForm(dim);
	s.Ahat_bas = CoefficientForm(dim);
	s.H3 = CoefficientForm(dim);
	s.caps = Caps{8, 4, 6};
	s.name = "flat" + std::to_string(dim);
	return s;
}

BundleScene BundleScene::parse(const std::string &text)
{
	std::map<std::string, std::pair<std::string, int>> kv;
	std::istringstream in(text);
	std::string line;
	for (int no = 1; std::getline(in, line); ++no) {
		auto hash = line.find('#');
		if (hash != std::string::npos)
			line.resize(hash);
		auto eq = line.find('=');
		auto trim = [](std::string s) {
			s.erase(0, s.find_first_not_of(" \t\r"));
			s.erase(s.find_last_not_of(" \t\r") + 1);
			return s;
		};
		if (trim(line).empty())
			continue;
		if (eq == std::string::npos)
			throw EngineError("SYNTAX", std::to_string(no) + ":1: expected key = value");
		kv[trim(line.substr(0, eq))] = {trim(line.substr(eq + 1)), no};
	}
	auto need = [&](const std::string &k) -> const std::string & {
		auto it = kv.find(k);
		if (it == kv.end())
			throw EngineError("SYNTAX", "missing key " + k);
		return it->second.first;
	};
	auto as_int = [&](const std::string &k, int dflt) {
		auto it = kv.find(k);
		if (it == kv.end())
			return dflt;
		try {
			return std::stoi(it->second.first);
		} catch (const std::exception &) {
			throw EngineError("SYNTAX", std::to_string(it->second.second) + ":1: " + k +
			                                " must be an integer");
		}
	};
	BundleScene s;
	need("base_dim");
	int dim = as_int("base_dim", -1);
	if (dim <= 0)
		throw EngineError("SYNTAX", "base_dim must be positive");
	if (kv.count("coords")) {
		std::vector<std::string> names;
		std::istringstream cs(kv["coords"].first);
		std::string tok;
		while (std::getline(cs, tok, ',')) {
			std::istringstream ts(tok);
			std::string t;
			ts >> t;
			if (!t.empty())
				names.push_back(t);
		}
		s.base = BasePatch(names);
		if (s.base.dim() != dim)
			throw EngineError("SYNTAX", "coords does not match base_dim");
	} else
		s.base = BasePatch::standard(dim);
	auto form = [&](const std::string &k) {
		try {
			return parse_form(need(k), s.base);
		} catch (const EngineError &e) {
			throw EngineError(e.code(), "line " + std::to_string(kv[k].second) + " (" + k +
			                                "): " + e.what());
		}
	};
	s.A_bas = form("A_bas");
	s.Ahat_bas = form("Ahat_bas");
	s.H3 = form("H3");
	s.caps = Caps{as_int("poly_cap", 8), as_int("fourier_cap", 4), as_int("weight_cap", 6)};
	s.validate();
	return s;
}

BundleScene BundleScene::load(const std::string &path_or_name)
{
	if (path_or_name == "std2d")
		return std2d();
	if (path_or_name.rfind("flat", 0) == 0 && path_or_name.size() == 5 &&
	    std::isdigit(static_cast<unsigned char>(path_or_name[4])))
		return flat(path_or_name[4] - '0');
	std::ifstream f(path_or_name);
	if (!f)
		throw EngineError("USAGE", "cannot open scene " + path_or_name);
	std::stringstream ss;
	ss << f.rdbuf();
	BundleScene s = parse(ss.str());
	s.name = path_or_name;
	return s;
}

} // namespace vcdr
