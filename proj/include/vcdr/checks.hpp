#pragma once

#include "vcdr/session.hpp"

#include <cstdint>
#include <random>

namespace vcdr {

struct CheckRecord {
	std::string name;
	bool pass = true;
	size_t count = 0;    // identities evaluated
	std::string witness; // first failure, or the documented example
};

struct SweepConfig {
	std::uint64_t seed = 7;
	int samples = 200;
	int weight_cap = 3;
	int max_len = 3;
	std::vector<int> indices{-2, -1, 1, 2};
	bool parallel = true;
};

// Seeded states :l1 :l2 ... lk:: built from sample letters (and their derivatives),
// nonzero and of filtration weight at most cfg.weight_cap.
std::vector<State> sample_states(const Algebra &alg, const SweepConfig &cfg, int count);
std::vector<State> generator_states(const Algebra &alg, const std::vector<int> &indices);
std::vector<State> length_two_words(const Algebra &alg, const std::vector<int> &indices);
// Random form with small integer coefficients and polynomial degree at most 2.
CoefficientForm random_form(int dim, std::mt19937_64 &rng, int max_terms = 3);

// Defect of an identity on one input; zero means the identity holds.
using DefectFn = std::function<State(const State &)>;

CheckRecord sweep_serial(const std::string &name, const Algebra &in, const Algebra &out,
                         const std::vector<State> &xs, const DefectFn &f);
// Same record as sweep_serial; the first failure is chosen by sample order.
CheckRecord sweep_parallel(const std::string &name, const Algebra &in, const Algebra &out,
                           const std::vector<State> &xs, const DefectFn &f);
CheckRecord sweep(const std::string &name, const Algebra &in, const Algebra &out,
                  const std::vector<State> &xs, const DefectFn &f, bool parallel);

std::vector<CheckRecord> check_topological(int dim);
std::vector<CheckRecord> check_topological(const CdrPatch &p);
std::vector<CheckRecord> check_cdr(const CdrPatch &p, const SweepConfig &cfg);
std::vector<CheckRecord> check_untwist(const Session &s, const SweepConfig &cfg);
// Table consistency of every algebra plus OPE preservation by untwist, phi and psi_hat.
std::vector<CheckRecord> check_opes(const Session &s, const SweepConfig &cfg);
std::vector<CheckRecord> check_d2(const Session &s, const SweepConfig &cfg);
std::vector<CheckRecord> check_phi(const Session &s, const SweepConfig &cfg);
std::vector<CheckRecord> check_roundtrip(const Session &s, const SweepConfig &cfg);
std::vector<CheckRecord> check_weight_zero(const Session &s, const SweepConfig &cfg);
// Throws SCENE_NOT_TRIVIAL unless the scene has vanishing curvatures and flux.
std::vector<CheckRecord> check_homotopy(const BundleScene &scene, const SweepConfig &cfg);
std::vector<CheckRecord> check_parser(const Session &s, const SweepConfig &cfg, int count = 500);

// Everything above; the homotopy runs on the flat scene of the same base.
std::vector<CheckRecord> suite_all(const Session &s, const SweepConfig &cfg);

void sort_records(std::vector<CheckRecord> &rs);
bool all_pass(const std::vector<CheckRecord> &rs);
// `CHECK <name> PASS|FAIL <count> [witness]`, one per line.
std::string format_lines(const std::vector<CheckRecord> &rs);
std::string format_text(const std::vector<CheckRecord> &rs);

} // namespace vcdr
