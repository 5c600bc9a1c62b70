#include "vcdr/algebra.hpp"

#include <sstream>

namespace vcdr {

Rational factorial(int n)
{
	Rational r = 1;
	for (int i = 2; i <= n; ++i)
		r *= i;
	return r;
}

Rational falling(int n, int k)
{
	Rational r = 1;
	for (int i = 0; i < k; ++i)
		r *= n - i;
	return r;
}

Rational binomial(int n, int k)
{
	if (k < 0)
		return 0;
	return falling(n, k) / factorial(k);
}

namespace {

struct LWKey {
	Letter l;
	int n;
	Word w;
	bool operator==(const LWKey &) const = default;
};

struct WWKey {
	Word a;
	Word b;
	int n;
	bool operator==(const WWKey &) const = default;
};

struct LLKey {
	Letter a;
	Letter b;
	bool operator==(const LLKey &) const = default;
};

struct LWHash {
	size_t operator()(const LWKey &k) const noexcept
	{
		size_t h = WordHash{}(k.w);
		h ^= WordHash{}(Word{k.l}) * 31 + size_t(k.n) * 0x100000001b3ull;
		return h;
	}
};

struct WWHash {
	size_t operator()(const WWKey &k) const noexcept
	{
		return WordHash{}(k.a) * 1000003 ^ WordHash{}(k.b) ^ (size_t(k.n) << 7);
	}
};

struct LLHash {
	size_t operator()(const LLKey &k) const noexcept { return WordHash{}(Word{k.a, k.b}); }
};

template <class K, class V, class H>
class Sharded
{
  public:
	std::optional<V> get(const K &k) const
	{
		auto &s = shards_[H{}(k) % N];
		std::lock_guard<std::mutex> g(s.mu);
		auto it = s.map.find(k);
		if (it == s.map.end())
			return std::nullopt;
		return it->second;
	}
	void put(const K &k, const V &v) const
	{
		auto &s = shards_[H{}(k) % N];
		std::lock_guard<std::mutex> g(s.mu);
		s.map.emplace(k, v);
	}
	void clear() const
	{
		for (auto &s : shards_) {
			std::lock_guard<std::mutex> g(s.mu);
			s.map.clear();
		}
	}
	size_t size() const
	{
		size_t n = 0;
		for (auto &s : shards_) {
			std::lock_guard<std::mutex> g(s.mu);
			n += s.map.size();
		}
		return n;
	}

  private:
	static constexpr size_t N = 32;
	struct Shard {
		mutable std::mutex mu;
		std::unordered_map<K, V, H> map;
	};
	mutable std::array<Shard, N> shards_;
};

thread_local int g_depth = 0;

struct DepthGuard {
	explicit DepthGuard(int cap)
	{
		if (++g_depth > cap) {
			--g_depth;
			throw cap_exceeded("normal ordering recursion depth");
		}
	}
	~DepthGuard() { --g_depth; }
};

Word tail(const Word &w)
{
	return Word(w.begin() + 1, w.end());
}

Word prepend(const Letter &a, const Word &w)
{
	Word r;
	r.reserve(w.size() + 1);
	r.push_back(a);
	r.insert(r.end(), w.begin(), w.end());
	return r;
}

} // namespace

struct Algebra::Caches {
	Sharded<LLKey, Poles, LLHash> ope;
	Sharded<Word, State, WordHash> deriv;
	Sharded<LWKey, State, LWHash> insert;
	Sharded<LWKey, State, LWHash> genprod;
	Sharded<WWKey, State, WWHash> nprod;
	Sharded<WWKey, State, WWHash> product;
};

Algebra::Algebra(std::string name) : name_(std::move(name)), caches_(std::make_unique<Caches>()) {}

Algebra::~Algebra() = default;

int Algebra::add_generator(Generator g)
{
	if (by_name_.count(g.name))
		throw EngineError("PRECONDITION", "duplicate generator " + g.name);
	int id = static_cast<int>(gens_.size());
	by_name_[g.name] = id;
	gens_.push_back(std::move(g));
	clear_cache();
	return id;
}

int Algebra::find(const std::string &name) const
{
	auto it = by_name_.find(name);
	return it == by_name_.end() ? -1 : it->second;
}

void Algebra::set_ope(int a, int b, Poles poles)
{
	while (!poles.empty() && poles.back().is_zero())
		poles.pop_back();
	table_[{a, b}] = std::move(poles);
	clear_cache();
}

void Algebra::add_rule(OpeRule r)
{
	rules_.push_back(std::move(r));
	clear_cache();
}

std::map<std::pair<int, int>, Poles> &Algebra::table_mut()
{
	clear_cache();
	return table_;
}

void Algebra::clear_cache() const
{
	caches_->ope.clear();
	caches_->deriv.clear();
	caches_->insert.clear();
	caches_->genprod.clear();
	caches_->nprod.clear();
	caches_->product.clear();
}

size_t Algebra::cache_size() const
{
	return caches_->ope.size() + caches_->deriv.size() + caches_->insert.size() +
	       caches_->genprod.size() + caches_->nprod.size() + caches_->product.size();
}

std::optional<Poles> Algebra::direct(const Letter &a, const Letter &b) const
{
	if (!gens_[a.gen].family && !gens_[b.gen].family) {
		auto it = table_.find({a.gen, b.gen});
		if (it != table_.end())
			return it->second;
	}
	for (auto &r : rules_)
		if (auto p = r(a, b))
			return p;
	return std::nullopt;
}

bool Algebra::has_direct(const Letter &a, const Letter &b) const
{
	return direct(a, b).has_value();
}

Poles Algebra::ope(const Letter &a, const Letter &b) const
{
	LLKey key{a, b};
	if (auto c = caches_->ope.get(key))
		return *c;
	Poles out;
	if (auto p = direct(a, b)) {
		out = *p;
	} else if (auto q = direct(b, a)) {
		// a_(n)b = (-1)^{ab} sum_j (-1)^{n+j+1} d^j (b_(n+j)a) / j!
		const Poles &rev = *q;
		int top = static_cast<int>(rev.size());
		bool sgn = odd(a) && odd(b);
		for (int n = 0; n < top; ++n) {
			State s;
			for (int j = 0; n + j < top; ++j) {
				if (rev[n + j].is_zero())
					continue;
				Rational c = ((n + j + 1) % 2 == 0) ? 1 : -1;
				if (sgn)
					c = -c;
				s.add_scaled(divided_derivative(rev[n + j], j), c);
			}
			out.push_back(std::move(s));
		}
		while (!out.empty() && out.back().is_zero())
			out.pop_back();
	}
	caches_->ope.put(key, out);
	return out;
}

State Algebra::letter(int gen, int index) const
{
	const Generator &g = gens_.at(gen);
	if (g.exponential && index == 0)
		return State::vacuum();
	return State::word(Word{letter_of(gen, index)});
}

bool Algebra::odd(const Word &w) const
{
	bool p = false;
	for (auto &l : w)
		p ^= gens_[l.gen].odd;
	return p;
}

bool Algebra::odd(const State &s) const
{
	bool seen = false, p = false;
	for (auto &[w, c] : s.terms()) {
		bool q = odd(w);
		if (seen && q != p)
			throw EngineError("PRECONDITION", "state of mixed parity");
		seen = true;
		p = q;
	}
	return p;
}

int Algebra::weight(const Word &w) const
{
	int s = 0;
	for (auto &l : w)
		s += weight(l);
	return s;
}

int Algebra::weight_bound(const State &s) const
{
	int m = 0;
	for (auto &[w, c] : s.terms())
		m = std::max(m, weight(w));
	return m;
}

int Algebra::degree(const Word &w) const
{
	int s = 0;
	for (auto &l : w)
		s += gens_[l.gen].degree;
	return s;
}

bool Algebra::is_canonical(const Word &w) const
{
	for (size_t i = 0; i < w.size(); ++i) {
		const Generator &g = gens_[w[i].gen];
		if (g.derivative && w[i].der != 0)
			return false;
		if (g.exponential && w[i].index == 0)
			return false;
		if (i + 1 < w.size()) {
			if (w[i + 1] < w[i])
				return false;
			if (w[i + 1] == w[i] && g.odd)
				return false;
			if (g.exponential && w[i + 1].gen == w[i].gen)
				return false;
		}
	}
	return true;
}

State Algebra::letter_derivative(const Letter &a) const
{
	const Generator &g = gens_[a.gen];
	if (!g.derivative) {
		Letter b = a;
		b.der += 1;
		return State::word(Word{b});
	}
	State s = g.derivative(a.index);
	for (int k = 0; k < a.der; ++k)
		s = derivative(s);
	return s;
}

State Algebra::derivative(const State &a) const
{
	State r;
	for (auto &[w, c] : a.terms())
		r.add_scaled(derivative_word(w), c);
	return r;
}

State Algebra::divided_derivative(const State &a, int k) const
{
	State r = a;
	for (int i = 0; i < k; ++i)
		r = derivative(r);
	if (k > 1)
		r *= 1 / factorial(k);
	return r;
}

State Algebra::derivative_word(const Word &w) const
{
	if (w.empty())
		return {};
	if (auto c = caches_->deriv.get(w))
		return *c;
	DepthGuard guard(depth_cap_);
	Word rest = tail(w);
	State r = nprod(letter_derivative(w[0]), State::word(rest));
	r += insert(w[0], derivative_word(rest));
	caches_->deriv.put(w, r);
	return r;
}

State Algebra::nprod(const State &a, const State &b) const
{
	State r;
	for (auto &[wa, ca] : a.terms())
		for (auto &[wb, cb] : b.terms())
			r.add_scaled(nprod_word(wa, wb), ca * cb);
	return r;
}

State Algebra::nprod_ws(const Word &w, const State &y) const
{
	State r;
	for (auto &[wy, c] : y.terms())
		r.add_scaled(nprod_word(w, wy), c);
	return r;
}

State Algebra::insert(const Letter &a, const State &y) const
{
	State r;
	for (auto &[w, c] : y.terms())
		r.add_scaled(insert_word(a, w), c);
	return r;
}

State Algebra::nprod_word(const Word &w, const Word &y) const
{
	if (w.empty())
		return State::word(y);
	if (w.size() == 1)
		return insert_word(w[0], y);
	WWKey key{w, y, -1};
	if (auto c = caches_->nprod.get(key))
		return *c;
	DepthGuard guard(depth_cap_);
	const Letter &a = w[0];
	Word wp = tail(w);
	State ys = State::word(y);
	State wps = State::word(wp);
	State r = insert(a, nprod_word(wp, y));
	int ww = weight(wp), wy = weight(y), wa = weight(a);
	State as = State::word(Word{a});
	for (int j = 1; j <= ww + wy; ++j) {
		State z = product_word(wp, y, j - 1);
		if (!z.is_zero())
			r += nprod(divided_derivative(as, j), z);
	}
	Rational sgn = (odd(a) && odd(wp)) ? -1 : 1;
	for (int j = 0; j <= wa + wy - 1; ++j) {
		State x = product_letter_word(a, j, y);
		if (!x.is_zero())
			r.add_scaled(nprod(divided_derivative(wps, j + 1), x), sgn);
	}
	caches_->nprod.put(key, r);
	return r;
}

State Algebra::insert_word(const Letter &a, const Word &w) const
{
	if (w.empty())
		return State::word(Word{a});
	const Letter &b = w[0];
	const Generator &ga = gens_[a.gen];
	bool collapse = ga.exponential && a.gen == b.gen;
	if (!collapse && (a < b || (a == b && !ga.odd)))
		return State::word(prepend(a, w));
	LWKey key{a, 0, w};
	if (auto c = caches_->insert.get(key))
		return *c;
	DepthGuard guard(depth_cap_);
	Word rest = tail(w);
	State r;
	if (collapse) {
		int idx = a.index + b.index;
		if (idx == 0)
			r = State::word(rest);
		else
			r = insert_word(letter_of(a.gen, idx), rest);
		int wr = weight(rest);
		State as = State::word(Word{a}), bs = State::word(Word{b});
		for (int j = 0; j <= weight(b) + wr - 1; ++j) {
			State x = product_letter_word(b, j, rest);
			if (!x.is_zero())
				r -= nprod(divided_derivative(as, j + 1), x);
		}
		for (int j = 0; j <= weight(a) + wr - 1; ++j) {
			State x = product_letter_word(a, j, rest);
			if (!x.is_zero())
				r -= nprod(divided_derivative(bs, j + 1), x);
		}
	} else if (a == b) {
		// odd letter squared: a_(-1)a_(-1) = 1/2 [a_(-1), a_(-1)]
		State rs = State::word(rest);
		for (int j = 0; j <= 2 * weight(a) - 1; ++j) {
			State x = product_letter_word(a, j, Word{a});
			if (x.is_zero())
				continue;
			Rational c = Rational(j % 2 ? -1 : 1, 2);
			r.add_scaled(nprod(divided_derivative(x, j + 1), rs), c);
		}
	} else {
		Rational sgn = (ga.odd && gens_[b.gen].odd) ? -1 : 1;
		r = insert(b, insert_word(a, rest));
		r *= sgn;
		State rs = State::word(rest);
		for (int j = 0; j <= weight(a) + weight(b) - 1; ++j) {
			State x = product_letter_word(a, j, Word{b});
			if (x.is_zero())
				continue;
			r.add_scaled(nprod(divided_derivative(x, j + 1), rs), j % 2 ? -1 : 1);
		}
	}
	caches_->insert.put(key, r);
	return r;
}

State Algebra::product_letter(const Letter &a, int n, const State &y) const
{
	State r;
	for (auto &[w, c] : y.terms())
		r.add_scaled(product_letter_word(a, n, w), c);
	return r;
}

State Algebra::product_letter_word(const Letter &a, int n, const Word &y) const
{
	if (n < a.der)
		return {};
	Letter g = a;
	g.der = 0;
	State r = genprod(g, n - a.der, y);
	if (a.der > 0)
		r *= ((a.der % 2) ? -1 : 1) * falling(n, a.der);
	return r;
}

State Algebra::letter_letter(const Letter &g, int m, const Letter &b) const
{
	Letter h = b;
	h.der = 0;
	Poles p = ope(g, h);
	State r;
	int l = b.der;
	for (int i = 0; i <= std::min(l, m); ++i) {
		int k = m - i;
		if (k >= static_cast<int>(p.size()) || p[k].is_zero())
			continue;
		State t = p[k];
		for (int e = 0; e < l - i; ++e)
			t = derivative(t);
		r.add_scaled(t, binomial(l, i) * falling(m, i));
	}
	return r;
}

State Algebra::genprod(const Letter &g, int m, const Word &w) const
{
	if (w.empty())
		return {};
	if (m >= weight(g) + weight(w))
		return {};
	LWKey key{g, m, w};
	if (auto c = caches_->genprod.get(key))
		return *c;
	DepthGuard guard(depth_cap_);
	const Letter &b = w[0];
	Word rest = tail(w);
	State rs = State::word(rest);
	State r = nprod(letter_letter(g, m, b), rs);
	State inner = genprod(g, m, rest);
	if (!inner.is_zero()) {
		Rational sgn = (odd(g) && odd(b)) ? -1 : 1;
		r.add_scaled(insert(b, inner), sgn);
	}
	for (int j = 0; j < m; ++j) {
		State x = letter_letter(g, j, b);
		if (!x.is_zero())
			r.add_scaled(product(x, rs, m - 1 - j), binomial(m, j));
	}
	caches_->genprod.put(key, r);
	return r;
}

State Algebra::product(const State &a, const State &b, int n) const
{
	if (n < 0)
		return nprod(divided_derivative(a, -n - 1), b);
	State r;
	for (auto &[wa, ca] : a.terms())
		for (auto &[wb, cb] : b.terms())
			r.add_scaled(product_word(wa, wb, n), ca * cb);
	return r;
}

State Algebra::product_ws(const Word &w, const State &y, int n) const
{
	if (n < 0)
		return nprod(divided_derivative(State::word(w), -n - 1), y);
	State r;
	for (auto &[wy, c] : y.terms())
		r.add_scaled(product_word(w, wy, n), c);
	return r;
}

State Algebra::product_word(const Word &w, const Word &y, int n) const
{
	if (w.empty())
		return {};
	if (n >= weight(w) + weight(y))
		return {};
	if (w.size() == 1)
		return product_letter_word(w[0], n, y);
	WWKey key{w, y, n};
	if (auto c = caches_->product.get(key))
		return *c;
	DepthGuard guard(depth_cap_);
	const Letter &a = w[0];
	Word wp = tail(w);
	int ww = weight(wp), wy = weight(y), wa = weight(a);
	State as = State::word(Word{a});
	State r;
	for (int j = 0; n + j <= ww + wy - 1; ++j) {
		State z = product_word(wp, y, n + j);
		if (!z.is_zero())
			r += nprod(divided_derivative(as, j), z);
	}
	Rational sgn = (odd(a) && odd(wp)) ? -1 : 1;
	for (int j = 0; j <= wa + wy - 1; ++j) {
		State x = product_letter_word(a, j, y);
		if (!x.is_zero())
			r.add_scaled(product_ws(wp, x, n - 1 - j), sgn);
	}
	caches_->product.put(key, r);
	return r;
}

State Algebra::normalize(const Word &raw) const
{
	State s = State::vacuum();
	for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
		State l;
		if (it->der == 0)
			l = letter(it->gen, it->index);
		else if (gens_[it->gen].derivative)
			l = letter_derivative(*it);
		else
			l = State::word(Word{*it});
		s = nprod(l, s);
	}
	return s;
}

State Algebra::normalize(const State &raw) const
{
	State r;
	for (auto &[w, c] : raw.terms())
		r.add_scaled(normalize(w), c);
	return r;
}

std::string Algebra::letter_str(const Letter &l) const
{
	const Generator &g = gens_[l.gen];
	std::string s = g.label ? g.label(l.index) : g.name;
	for (int k = 0; k < l.der; ++k)
		s = "del(" + s + ")";
	return s;
}

std::string Algebra::word_str(const Word &w) const
{
	if (w.empty())
		return "1";
	std::string s;
	for (size_t i = 0; i < w.size();) {
		size_t j = i;
		while (j < w.size() && w[j] == w[i])
			++j;
		if (i)
			s += "*";
		s += letter_str(w[i]);
		if (j - i > 1)
			s += "^" + std::to_string(j - i);
		i = j;
	}
	return s;
}

std::string Algebra::str(const State &s) const
{
	if (s.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (auto &[w, c] : s.terms()) {
		Rational a = abs(c);
		if (c < 0)
			out += first ? "-" : " - ";
		else if (!first)
			out += " + ";
		if (w.empty())
			out += a.get_str();
		else {
			if (a != 1)
				out += a.get_str() + "*";
			out += word_str(w);
		}
		first = false;
	}
	return out;
}

Derivation::Derivation(const Algebra &alg, Rule on_generator, bool odd)
    : alg_(alg), rule_(std::move(on_generator)), odd_(odd)
{}

State Derivation::operator()(const State &a) const
{
	State r;
	for (auto &[w, c] : a.terms())
		r.add_scaled(on_word(w), c);
	return r;
}

State Derivation::on_word(const Word &w) const
{
	if (w.empty())
		return {};
	{
		std::lock_guard<std::mutex> g(mu_);
		auto it = cache_.find(w);
		if (it != cache_.end())
			return it->second;
	}
	Letter a = w[0];
	Letter base = a;
	base.der = 0;
	State da = rule_(base);
	for (int k = 0; k < a.der; ++k)
		da = alg_.derivative(da);
	Word rest(w.begin() + 1, w.end());
	State r = alg_.nprod(da, State::word(rest));
	State dr = on_word(rest);
	if (!dr.is_zero())
		r.add_scaled(alg_.nprod(State::word(Word{a}), dr), (odd_ && alg_.odd(a)) ? -1 : 1);
	std::lock_guard<std::mutex> g(mu_);
	cache_.emplace(w, r);
	return r;
}

Homomorphism::Homomorphism(const Algebra &src, const Algebra &dst, Rule on_generator)
    : src_(src), dst_(dst), rule_(std::move(on_generator))
{}

State Homomorphism::operator()(const State &a) const
{
	State r;
	for (auto &[w, c] : a.terms())
		r.add_scaled(on_word(w), c);
	return r;
}

State Homomorphism::on_word(const Word &w) const
{
	if (w.empty())
		return State::vacuum();
	{
		std::lock_guard<std::mutex> g(mu_);
		auto it = cache_.find(w);
		if (it != cache_.end())
			return it->second;
	}
	Letter a = w[0];
	Letter base = a;
	base.der = 0;
	State ia = rule_(base);
	for (int k = 0; k < a.der; ++k)
		ia = dst_.derivative(ia);
	Word rest(w.begin() + 1, w.end());
	State r = dst_.nprod(ia, on_word(rest));
	std::lock_guard<std::mutex> g(mu_);
	cache_.emplace(w, r);
	return r;
}

} // namespace vcdr
