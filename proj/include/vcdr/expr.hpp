#pragma once

#include "vcdr/algebra.hpp"

#include <optional>

namespace vcdr {

struct Node {
	enum Kind { Num, Sym, Call, Add, Neg, Mul, Pow, Prod, Vec };
	Kind kind = Num;
	Rational num;
	std::string name;
	int k = 0; // exponent of Pow, mode index of Prod
	std::vector<Node> kids;
	int line = 1, col = 1;
};

// Grammar: sums of right-associative `*` products of powers of atoms. Atoms are
// rationals, names, calls name(args), parentheses, `[f, g, ...]` and the mode
// product `:k(a, b):` whose closing colon is optional. `a^k*b` nests to the right like
// `a*...*a*b`. Throws SYNTAX.
Node parse_expr(const std::string &text);

// Evaluates a pure differential form (coordinates, dx, ph(n), d, + - * ^).
std::optional<CoefficientForm> try_form(const Node &n, const BasePatch &base);
CoefficientForm parse_form(const std::string &text, const BasePatch &base);

class ExprContext
{
  public:
	virtual ~ExprContext() = default;
	virtual const Algebra &alg() const = 0;
	virtual const BasePatch &base() const = 0;
	virtual State form(const CoefficientForm &w) const = 0;
	// Named generators and fields.
	virtual std::optional<State> symbol(const std::string &name) const;
	// iota(X), Lie(X).
	virtual std::optional<State> vector_op(const std::string &name, const VectorField &X) const;
	// Indexed families such as s(n).
	virtual std::optional<State> family(const std::string &name, int n) const;
};

// d(a) is the de Rham differential when a is a pure form and the translation
// operator otherwise; del(a) is always the translation operator.
State evaluate(const Node &n, const ExprContext &ctx);
State parse_state(const std::string &text, const ExprContext &ctx);

} // namespace vcdr
