#pragma once

#include <random>
#include <string>
#include <vector>

#include "echkit/braid.hpp"
#include "echkit/partitions.hpp"
#include "echkit/reeb.hpp"

namespace echkit::verify {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The acceptance criteria, in order. `fast` trims sample counts and grid
// sizes for a quick smoke run; the full suite uses the pinned parameters.
CriterionResult model_spectrum(bool fast);
CriterionResult cz_cross_validation(bool fast, unsigned long long seed);
CriterionResult partition_suite(bool fast);
CriterionResult writhe_suite(bool fast, unsigned long long seed);
CriterionResult index_suite(bool fast, unsigned long long seed);
CriterionResult complex_suite(bool fast, unsigned long long seed);
CriterionResult gluing_parity_suite();

std::vector<CriterionResult> run_all(bool fast, unsigned long long seed);

// Deterministic sample-data builders shared with the unit tests.
Braid random_circle_braid(std::mt19937_64& rng, int n_strands, int band_offset = 0);
Braid random_interval_braid(std::mt19937_64& rng, int n_strands, int band_offset = 0);
ReebDatum mixed_datum();

// Brute-force oracles (lattice-path enumeration); exposed for the unit tests.
Partition oracle_partition_positive(const Rational& theta, long long m);
Partition oracle_partition_negative(const Rational& theta, long long m);

}  // namespace echkit::verify
