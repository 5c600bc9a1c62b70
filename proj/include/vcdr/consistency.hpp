#pragma once

#include "vcdr/forms.hpp"

namespace vcdr {

struct NamedRelation {
	std::string name;
	std::function<State()> value;
};

struct ConsistencyOptions {
	std::vector<int> family_indices{-2, -1, 1, 2};
	std::vector<NamedRelation> relations;
	bool jacobi = true;
	// Restrict Jacobi triples to generators whose id is listed (empty: all).
	std::vector<int> jacobi_generators;
};

struct ConsistencyReport {
	bool pass = true;
	size_t checks = 0;
	std::vector<std::string> failures;

	std::string first() const { return failures.empty() ? std::string() : failures.front(); }
};

// Locality bounds, parity, skew-symmetry of doubly listed pairs, translation and
// collapse rules, Jacobi identities on generator triples and the given relations.
ConsistencyReport check_consistency(const Algebra &alg, const ConsistencyOptions &opt = {});

// Sample letters: one per plain generator, one per listed index for families.
std::vector<Letter> sample_letters(const Algebra &alg, const std::vector<int> &family_indices);

// Relations tying iota_X and L_X to the form letters on sample data: iota_{gX} = :g iota_X:,
// products of functions and one-forms, the chain rule, and the OPEs of L_{gX}, iota_{gX}
// with functions and one-forms.
std::vector<NamedRelation> cartan_relations(const Algebra &alg, const FormBasis &fb,
                                            std::function<State(const VectorField &)> iota,
                                            std::function<State(const VectorField &)> lie);

// Pairs of letters whose OPE is not carried over by f, formatted as "u_(k)v: diff".
std::vector<std::string> ope_defects(const Homomorphism &f, const std::vector<Letter> &letters,
                                     size_t limit = 1000);

} // namespace vcdr
