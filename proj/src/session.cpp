#include "vcdr/session.hpp"

namespace vcdr {

Side parse_side(const std::string &name)
{
	if (name == "cdr")
		return Side::Cdr;
	if (name == "twisted")
		return Side::Twisted;
	if (name == "exotic")
		return Side::Exotic;
	throw EngineError("USAGE", "unknown algebra " + name + " (cdr, twisted, exotic)");
}

const char *side_name(Side s)
{
	switch (s) {
	case Side::Cdr:
		return "cdr";
	case Side::Twisted:
		return "twisted";
	case Side::Exotic:
		return "exotic";
	}
	return "?";
}

namespace {

class CdrContext : public ExprContext
{
  public:
	explicit CdrContext(const CdrPatch &p) : p_(p) {}
	const Algebra &alg() const override { return p_.alg(); }
	const BasePatch &base() const override { return p_.base(); }
	State form(const CoefficientForm &w) const override { return p_.form(w); }
	std::optional<State> symbol(const std::string &name) const override
	{
		if (name == "J")
			return p_.J();
		if (name == "Q")
			return p_.Q();
		if (name == "G")
			return p_.G();
		if (name == "L")
			return p_.L();
		return ExprContext::symbol(name);
	}
	std::optional<State> vector_op(const std::string &name, const VectorField &X) const override
	{
		return name == "iota" ? p_.iota(X) : p_.lieop(X);
	}

  private:
	const CdrPatch &p_;
};

class TwistedContext : public ExprContext
{
  public:
	explicit TwistedContext(const TwistedPatch &p) : p_(p) {}
	const Algebra &alg() const override { return p_.alg(); }
	const BasePatch &base() const override { return p_.scene().base; }
	State form(const CoefficientForm &w) const override { return p_.form(w); }
	std::optional<State> symbol(const std::string &name) const override
	{
		if (name == "H")
			return p_.H();
		if (name == "xi")
			return p_.xi();
		return ExprContext::symbol(name);
	}
	std::optional<State> vector_op(const std::string &name, const VectorField &X) const override
	{
		return name == "iota" ? p_.iota(X) : p_.lie(X);
	}
	std::optional<State> family(const std::string &name, int n) const override
	{
		if (name == "ph")
			return p_.E(n);
		return std::nullopt;
	}

  private:
	const TwistedPatch &p_;
};

class ExoticContext : public ExprContext
{
  public:
	explicit ExoticContext(const ExoticPatch &p) : p_(p) {}
	const Algebra &alg() const override { return p_.alg(); }
	const BasePatch &base() const override { return p_.scene().base; }
	State form(const CoefficientForm &w) const override { return p_.form(w); }
	std::optional<State> symbol(const std::string &name) const override
	{
		if (name == "Hhat")
			return p_.Hhat();
		if (name == "xi")
			return p_.xi();
		return ExprContext::symbol(name);
	}
	std::optional<State> vector_op(const std::string &name, const VectorField &X) const override
	{
		return name == "iota" ? p_.iota(X) : p_.lie(X);
	}
	std::optional<State> family(const std::string &name, int n) const override
	{
		if (name == "s")
			return p_.S(n);
		return std::nullopt;
	}

  private:
	const ExoticPatch &p_;
};

} // namespace

Session::Session(const BundleScene &scene, TauConvention conv)
    : pair_(std::make_unique<DualityPair>(scene, conv)),
      cdr_(std::make_unique<CdrPatch>(scene.base))
{
	ctx_[0] = std::make_unique<CdrContext>(*cdr_);
	ctx_[1] = std::make_unique<TwistedContext>(pair_->twisted());
	ctx_[2] = std::make_unique<ExoticContext>(pair_->exotic());
}

Session::~Session() = default;

const Algebra &Session::alg(Side s) const { return context(s).alg(); }

Algebra &Session::alg_mut(Side s)
{
	switch (s) {
	case Side::Cdr:
		return cdr_->alg_mut();
	case Side::Twisted:
		return pair_->twisted_mut().alg_mut();
	case Side::Exotic:
		break;
	}
	return pair_->exotic_mut().alg_mut();
}

const ExprContext &Session::context(Side s) const { return *ctx_[static_cast<int>(s)]; }

State Session::parse(const std::string &text, Side s) const { return parse_state(text, context(s)); }

} // namespace vcdr
