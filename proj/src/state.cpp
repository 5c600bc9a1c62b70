#include "vcdr/state.hpp"

namespace vcdr {

State State::vacuum(const Rational &c)
{
	State s;
	s.add(Word{}, c);
	return s;
}

State State::word(Word w, const Rational &c)
{
	State s;
	s.add(std::move(w), c);
	return s;
}

Rational State::coefficient(const Word &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Rational(0) : it->second;
}

void State::add(const Word &w, const Rational &c)
{
	if (c == 0)
		return;
	auto [it, fresh] = terms_.try_emplace(w, c);
	if (!fresh) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void State::add(Word &&w, const Rational &c)
{
	if (c == 0)
		return;
	auto [it, fresh] = terms_.try_emplace(std::move(w), c);
	if (!fresh) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void State::add_scaled(const State &o, const Rational &c)
{
	if (c == 0)
		return;
	for (auto &[w, v] : o.terms_)
		add(w, c * v);
}

State &State::operator+=(const State &o)
{
	if (terms_.empty()) {
		terms_ = o.terms_;
		return *this;
	}
	for (auto &[w, v] : o.terms_)
		add(w, v);
	return *this;
}

State &State::operator-=(const State &o)
{
	for (auto &[w, v] : o.terms_)
		add(w, -v);
	return *this;
}

State &State::operator*=(const Rational &c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto &[w, v] : terms_)
		v *= c;
	return *this;
}

State State::operator-() const
{
	State r = *this;
	r *= -1;
	return r;
}

} // namespace vcdr
