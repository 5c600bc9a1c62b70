#pragma once

#include "vcdr/cdr.hpp"
#include "vcdr/expr.hpp"
#include "vcdr/tduality.hpp"

namespace vcdr {

enum class Side { Cdr, Twisted, Exotic };

Side parse_side(const std::string &name);
const char *side_name(Side s);

// A scene with its three algebras and expression contexts for each. The cdr side is
// the untwisted patch on the base coordinates.
class Session
{
  public:
	explicit Session(const BundleScene &scene, TauConvention conv = TauConvention::Phi);
	~Session();

	const BundleScene &scene() const { return pair_->scene(); }
	const DualityPair &pair() const { return *pair_; }
	DualityPair &pair_mut() { return *pair_; }
	const CdrPatch &cdr() const { return *cdr_; }
	CdrPatch &cdr_mut() { return *cdr_; }

	const Algebra &alg(Side s) const;
	Algebra &alg_mut(Side s);
	const ExprContext &context(Side s) const;
	State parse(const std::string &text, Side s) const;
	std::string str(const State &a, Side s) const { return alg(s).str(a); }

  private:
	std::unique_ptr<DualityPair> pair_;
	std::unique_ptr<CdrPatch> cdr_;
	std::unique_ptr<ExprContext> ctx_[3];
};

} // namespace vcdr
