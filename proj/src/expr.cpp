#include "vcdr/expr.hpp"

#include <cctype>

namespace vcdr {

namespace {

class Parser
{
  public:
	explicit Parser(const std::string &t) : text_(t) {}

	Node parse()
	{
		Node n = sum();
		skip();
		if (pos_ < text_.size())
			fail("unexpected '" + std::string(1, text_[pos_]) + "'");
		return n;
	}

  private:
	[[noreturn]] void fail(const std::string &msg) const
	{
		int line = 1, col = 1;
		for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
			if (text_[i] == '\n') {
				++line;
				col = 1;
			} else
				++col;
		}
		throw EngineError("SYNTAX", std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
	}

	void skip()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	bool peek(char c)
	{
		skip();
		return pos_ < text_.size() && text_[pos_] == c;
	}

	bool accept(char c)
	{
		if (!peek(c))
			return false;
		++pos_;
		return true;
	}

	void expect(char c)
	{
		if (!accept(c))
			fail(std::string("expected '") + c + "'");
	}

	Node at() const
	{
		Node n;
		int line = 1, col = 1;
		for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
			if (text_[i] == '\n') {
				++line;
				col = 1;
			} else
				++col;
		}
		n.line = line;
		n.col = col;
		return n;
	}

	long integer()
	{
		skip();
		bool neg = false;
		if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
			neg = text_[pos_] == '-';
			++pos_;
			skip();
		}
		size_t start = pos_;
		while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		if (start == pos_)
			fail("expected integer");
		if (pos_ - start > 9)
			fail("integer too large");
		long v = std::stol(text_.substr(start, pos_ - start));
		return neg ? -v : v;
	}

	Node sum()
	{
		Node out = at();
		out.kind = Node::Add;
		bool neg = accept('-');
		if (!neg)
			accept('+');
		for (;;) {
			Node t = product();
			if (neg) {
				Node m = at();
				m.kind = Node::Neg;
				m.kids.push_back(std::move(t));
				t = std::move(m);
			}
			out.kids.push_back(std::move(t));
			if (accept('+'))
				neg = false;
			else if (accept('-'))
				neg = true;
			else
				break;
		}
		if (out.kids.size() == 1 && out.kids[0].kind != Node::Neg)
			return std::move(out.kids[0]);
		return out;
	}

	Node product()
	{
		Node a = power();
		if (!accept('*'))
			return a;
		Node n = at();
		n.kind = Node::Mul;
		n.kids.push_back(std::move(a));
		n.kids.push_back(product());
		return n;
	}

	Node power()
	{
		Node a = atom();
		if (!accept('^'))
			return a;
		Node n = at();
		n.kind = Node::Pow;
		n.k = static_cast<int>(integer());
		if (n.k < 0)
			fail("negative exponent");
		n.kids.push_back(std::move(a));
		return n;
	}

	Node atom()
	{
		skip();
		Node n = at();
		if (pos_ >= text_.size())
			fail("unexpected end of input");
		char c = text_[pos_];
		if (std::isdigit(static_cast<unsigned char>(c))) {
			n.kind = Node::Num;
			n.num = Rational(integer());
			if (accept('/')) {
				long q = integer();
				if (q <= 0)
					fail("bad denominator");
				n.num /= q;
			}
			n.num.canonicalize();
			return n;
		}
		if (c == '(') {
			++pos_;
			Node s = sum();
			expect(')');
			return s;
		}
		if (c == '[') {
			++pos_;
			n.kind = Node::Vec;
			if (!peek(']'))
				do
					n.kids.push_back(sum());
				while (accept(','));
			expect(']');
			return n;
		}
		if (c == ':') {
			++pos_;
			n.kind = Node::Prod;
			n.k = static_cast<int>(integer());
			expect('(');
			n.kids.push_back(sum());
			expect(',');
			n.kids.push_back(sum());
			expect(')');
			accept(':');
			return n;
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			size_t start = pos_;
			while (pos_ < text_.size() &&
			       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
				++pos_;
			n.name = text_.substr(start, pos_ - start);
			if (accept('(')) {
				n.kind = Node::Call;
				if (!peek(')'))
					do
						n.kids.push_back(sum());
					while (accept(','));
				expect(')');
			} else
				n.kind = Node::Sym;
			return n;
		}
		fail("unexpected '" + std::string(1, c) + "'");
	}

	const std::string &text_;
	size_t pos_ = 0;
};

[[noreturn]] void unknown(const Node &n, const std::string &what)
{
	throw EngineError("UNKNOWN_SYMBOL",
	                  std::to_string(n.line) + ":" + std::to_string(n.col) + ": " + what);
}

int int_arg(const Node &n)
{
	if (n.kids.size() != 1)
		throw EngineError("SYNTAX", std::to_string(n.line) + ":" + std::to_string(n.col) + ": " +
		                                n.name + " takes one integer");
	const Node &a = n.kids[0];
	if (a.kind == Node::Num && a.num.get_den() == 1)
		return static_cast<int>(a.num.get_num().get_si());
	if (a.kind == Node::Add && a.kids.size() == 1 && a.kids[0].kind == Node::Neg &&
	    a.kids[0].kids[0].kind == Node::Num && a.kids[0].kids[0].num.get_den() == 1)
		return -static_cast<int>(a.kids[0].kids[0].num.get_num().get_si());
	throw EngineError("SYNTAX", std::to_string(a.line) + ":" + std::to_string(a.col) +
	                                ": expected an integer argument");
}

} // namespace

Node parse_expr(const std::string &text) { return Parser(text).parse(); }

std::optional<CoefficientForm> try_form(const Node &n, const BasePatch &base)
{
	int dim = base.dim();
	switch (n.kind) {
	case Node::Num:
		return CoefficientForm::constant(dim, n.num);
	case Node::Sym: {
		int i = base.index_of(n.name);
		if (i >= 0)
			return CoefficientForm::coordinate(dim, i);
		if (n.name.size() > 1 && n.name[0] == 'd' && (i = base.index_of(n.name.substr(1))) >= 0)
			return CoefficientForm::dcoord(dim, i);
		return std::nullopt;
	}
	case Node::Call:
		if (n.name == "ph")
			return CoefficientForm::phase_unit(dim, int_arg(n));
		if (n.name == "d" && n.kids.size() == 1) {
			auto a = try_form(n.kids[0], base);
			if (a)
				return d(*a);
		}
		return std::nullopt;
	case Node::Add: {
		CoefficientForm r(dim);
		for (auto &k : n.kids) {
			auto a = try_form(k, base);
			if (!a)
				return std::nullopt;
			r += *a;
		}
		return r;
	}
	case Node::Neg: {
		auto a = try_form(n.kids[0], base);
		if (!a)
			return std::nullopt;
		return -*a;
	}
	case Node::Mul: {
		auto a = try_form(n.kids[0], base);
		if (!a)
			return std::nullopt;
		auto b = try_form(n.kids[1], base);
		if (!b)
			return std::nullopt;
		return wedge(*a, *b);
	}
	case Node::Pow: {
		auto a = try_form(n.kids[0], base);
		if (!a)
			return std::nullopt;
		CoefficientForm r = CoefficientForm::constant(dim, 1);
		for (int i = 0; i < n.k; ++i)
			r = wedge(r, *a);
		return r;
	}
	default:
		return std::nullopt;
	}
}

CoefficientForm parse_form(const std::string &text, const BasePatch &base)
{
	Node n = parse_expr(text);
	auto f = try_form(n, base);
	if (!f)
		unknown(n, "not a differential form: " + text);
	return *f;
}

std::optional<State> ExprContext::symbol(const std::string &name) const
{
	int g = alg().find(name);
	if (g < 0 || alg().gen(g).family)
		return std::nullopt;
	return alg().letter(g);
}

std::optional<State> ExprContext::vector_op(const std::string &, const VectorField &) const
{
	return std::nullopt;
}

std::optional<State> ExprContext::family(const std::string &, int) const { return std::nullopt; }

static VectorField vector_arg(const Node &n, const BasePatch &base)
{
	if (n.kids.size() != 1)
		unknown(n, n.name + " takes one vector field");
	const Node &a = n.kids[0];
	if (a.kind == Node::Sym && base.index_of(a.name) >= 0)
		return VectorField::coordinate(base.dim(), base.index_of(a.name));
	if (a.kind == Node::Vec && static_cast<int>(a.kids.size()) == base.dim()) {
		std::vector<CoefficientForm> comps;
		for (auto &k : a.kids) {
			auto f = try_form(k, base);
			if (!f || !f->is_function())
				unknown(k, "vector field components must be functions");
			comps.push_back(*f);
		}
		return VectorField::from(comps);
	}
	unknown(a, "expected a coordinate name or [f1, ..., fn]");
}

State evaluate(const Node &n, const ExprContext &ctx)
{
	const Algebra &A = ctx.alg();
	if (n.kind != Node::Num)
		if (auto f = try_form(n, ctx.base()))
			return ctx.form(*f);
	switch (n.kind) {
	case Node::Num:
		return n.num * State::vacuum();
	case Node::Sym:
		if (auto s = ctx.symbol(n.name))
			return *s;
		unknown(n, "unknown symbol " + n.name);
	case Node::Call:
		if (n.name == "del" || n.name == "d") {
			if (n.kids.size() != 1)
				unknown(n, n.name + " takes one argument");
			return A.derivative(evaluate(n.kids[0], ctx));
		}
		if (n.name == "iota" || n.name == "Lie") {
			if (auto s = ctx.vector_op(n.name, vector_arg(n, ctx.base())))
				return *s;
			unknown(n, n.name + " is not available in " + A.name());
		}
		if (auto s = ctx.family(n.name, int_arg(n)))
			return *s;
		unknown(n, "unknown function " + n.name);
	case Node::Add: {
		State r;
		for (auto &k : n.kids)
			r += evaluate(k, ctx);
		return r;
	}
	case Node::Neg:
		return -1 * evaluate(n.kids[0], ctx);
	case Node::Mul: {
		State right = evaluate(n.kids[1], ctx);
		if (n.kids[0].kind != Node::Pow)
			return A.nprod(evaluate(n.kids[0], ctx), right);
		// a^k*b is :a :a ... b::, matching how words are printed
		State base = evaluate(n.kids[0].kids[0], ctx);
		for (int i = 0; i < n.kids[0].k; ++i)
			right = A.nprod(base, right);
		return right;
	}
	case Node::Pow: {
		State base = evaluate(n.kids[0], ctx);
		State r = State::vacuum();
		for (int i = 0; i < n.k; ++i)
			r = A.nprod(base, r);
		return r;
	}
	case Node::Prod:
		return A.product(evaluate(n.kids[0], ctx), evaluate(n.kids[1], ctx), n.k);
	case Node::Vec:
		unknown(n, "vector literal outside iota/Lie");
	}
	unknown(n, "bad expression");
}

State parse_state(const std::string &text, const ExprContext &ctx)
{
	return evaluate(parse_expr(text), ctx);
}

} // namespace vcdr
