#pragma once

#include "vcdr/coeffring.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace vcdr {

// A generator, a family index (for indexed families such as e^{k theta}) and a
// number of translations.
struct Letter {
	std::uint16_t gen = 0;
	std::int16_t index = 0;
	std::uint16_t der = 0;

	auto operator<=>(const Letter &) const = default;
};

// Right-nested normally ordered product :l1 :l2 ... lk::, letters nondecreasing.
using Word = std::vector<Letter>;

struct WordHash {
	size_t operator()(const Word &w) const noexcept
	{
		size_t h = 0x9e3779b97f4a7c15ull ^ w.size();
		for (const Letter &l : w) {
			size_t v = (size_t(l.gen) << 32) ^ (size_t(std::uint16_t(l.index)) << 16) ^ l.der;
			h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
		}
		return h;
	}
};

class State
{
  public:
	using Terms = std::map<Word, Rational>;

	State() = default;
	static State vacuum(const Rational &c = 1);
	static State word(Word w, const Rational &c = 1);

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	size_t size() const { return terms_.size(); }
	Rational coefficient(const Word &w) const;

	void add(const Word &w, const Rational &c);
	void add(Word &&w, const Rational &c);
	void add_scaled(const State &o, const Rational &c);
	State &operator+=(const State &o);
	State &operator-=(const State &o);
	State &operator*=(const Rational &c);
	State operator-() const;
	friend State operator+(State a, const State &b) { return a += b; }
	friend State operator-(State a, const State &b) { return a -= b; }
	friend State operator*(const Rational &c, State a) { return a *= c; }
	bool operator==(const State &o) const { return terms_ == o.terms_; }

  private:
	Terms terms_;
};

} // namespace vcdr
