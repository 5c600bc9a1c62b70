#pragma once

#include "vcdr/state.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace vcdr {

// poles[k] = a_(k) b for k >= 0; trailing entries may be omitted.
using Poles = std::vector<State>;

struct Generator {
	std::string name;
	bool odd = false;
	// Upper bound for the filtration weight; a_(k)b = 0 once k >= wt(a) + wt(b).
	int weight = 0;
	int degree = 0;
	bool family = false;
	// :g_i g_j: = g_{i+j}, g_0 = vacuum.
	bool exponential = false;
	// Translation rule; such generators never carry derivatives in words.
	std::function<State(int index)> derivative;
	std::function<std::string(int index)> label;
};

// Supplies a_(k)b for generator letters (der = 0), or nothing if it does not apply.
using OpeRule = std::function<std::optional<Poles>(const Letter &, const Letter &)>;

class Algebra
{
  public:
	explicit Algebra(std::string name);
	~Algebra();
	Algebra(const Algebra &) = delete;
	Algebra &operator=(const Algebra &) = delete;

	const std::string &name() const { return name_; }

	int add_generator(Generator g);
	int find(const std::string &name) const;
	const Generator &gen(int id) const { return gens_.at(id); }
	Generator &gen_mut(int id) { return gens_.at(id); }
	int num_generators() const { return static_cast<int>(gens_.size()); }

	void set_ope(int a, int b, Poles poles);
	void add_rule(OpeRule r);
	const std::map<std::pair<int, int>, Poles> &table() const { return table_; }
	std::map<std::pair<int, int>, Poles> &table_mut();
	bool has_direct(const Letter &a, const Letter &b) const;
	// Generator-level OPE with reverse entries filled in by skew-symmetry.
	Poles ope(const Letter &a, const Letter &b) const;

	State letter(int gen, int index = 0) const;
	Letter letter_of(int gen, int index = 0) const { return Letter{std::uint16_t(gen), std::int16_t(index), 0}; }

	State derivative(const State &a) const;
	// d^k a / k!
	State divided_derivative(const State &a, int k) const;
	State nprod(const State &a, const State &b) const;
	// a_(n) b for any integer n.
	State product(const State &a, const State &b, int n) const;
	State normalize(const Word &raw) const;
	State normalize(const State &raw) const;

	bool odd(const Letter &l) const { return gens_[l.gen].odd; }
	bool odd(const Word &w) const;
	// Parity of a homogeneous state; throws on mixed parity.
	bool odd(const State &s) const;
	int weight(const Letter &l) const { return gens_[l.gen].weight + l.der; }
	int weight(const Word &w) const;
	int weight_bound(const State &s) const;
	int degree(const Word &w) const;
	bool is_canonical(const Word &w) const;

	std::string letter_str(const Letter &l) const;
	std::string word_str(const Word &w) const;
	std::string str(const State &s) const;

	void clear_cache() const;
	void set_depth_cap(int cap) { depth_cap_ = cap; }
	size_t cache_size() const;

  private:
	struct Caches;

	std::optional<Poles> direct(const Letter &a, const Letter &b) const;
	State letter_derivative(const Letter &a) const;
	State derivative_word(const Word &w) const;
	State insert(const Letter &a, const State &y) const;
	State insert_word(const Letter &a, const Word &w) const;
	State nprod_word(const Word &w, const Word &y) const;
	State nprod_ws(const Word &w, const State &y) const;
	State product_letter(const Letter &a, int n, const State &y) const;
	State product_letter_word(const Letter &a, int n, const Word &y) const;
	State letter_letter(const Letter &g, int m, const Letter &b) const;
	State genprod(const Letter &g, int m, const Word &w) const;
	State product_word(const Word &w, const Word &y, int n) const;
	State product_ws(const Word &w, const State &y, int n) const;

	std::string name_;
	std::vector<Generator> gens_;
	std::map<std::string, int> by_name_;
	std::map<std::pair<int, int>, Poles> table_;
	std::vector<OpeRule> rules_;
	int depth_cap_ = 4000;
	std::unique_ptr<Caches> caches_;
};

// Images of generators under an even or odd derivation, extended by the Leibniz rule.
class Derivation
{
  public:
	using Rule = std::function<State(const Letter &)>;
	Derivation(const Algebra &alg, Rule on_generator, bool odd);

	State operator()(const State &a) const;

  private:
	State on_word(const Word &w) const;

	const Algebra &alg_;
	Rule rule_;
	bool odd_;
	mutable std::mutex mu_;
	mutable std::unordered_map<Word, State, WordHash> cache_;
};

// Vertex algebra map determined by generator images.
class Homomorphism
{
  public:
	using Rule = std::function<State(const Letter &)>;
	Homomorphism(const Algebra &src, const Algebra &dst, Rule on_generator);

	State operator()(const State &a) const;
	const Algebra &source() const { return src_; }
	const Algebra &target() const { return dst_; }

  private:
	State on_word(const Word &w) const;

	const Algebra &src_;
	const Algebra &dst_;
	Rule rule_;
	mutable std::mutex mu_;
	mutable std::unordered_map<Word, State, WordHash> cache_;
};

Rational binomial(int n, int k);
Rational factorial(int n);
// n (n-1) ... (n-k+1), valid for negative n.
Rational falling(int n, int k);

} // namespace vcdr
