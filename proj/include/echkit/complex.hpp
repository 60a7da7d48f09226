#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "echkit/reeb.hpp"

namespace echkit {

// Action-filtered enumeration: every multiset with action <= L, ordered by
// (action, canonical key), complete and duplicate-free.
std::vector<OrbitChordSet> enumerate_sets(const ReebDatum& datum, const Rational& L);

struct GeneratorVerdict {
  bool ok = false;
  std::string reason;  // empty when ok
};

// ECH generator test: hyperbolic and chord multiplicities 1, at most one
// chord incident to each Legendrian component.
GeneratorVerdict is_ech_generator(const OrbitChordSet& set, const ReebDatum& datum);

// Canonical formal-sum label of the set's H1 class ("0" when trivial).
std::string h1_class(const OrbitChordSet& set, const ReebDatum& datum);

struct ComplexSpec {
  ReebDatum datum;
  Rational action_cap;
  std::vector<OrbitChordSet> generators;          // ordered by action
  std::map<std::string, std::string> class_of;    // generator key -> h1 label

  int generator_index(const std::string& key) const;  // -1 when absent
  nlohmann::json to_json() const;
  static ComplexSpec from_json(const nlohmann::json& j);
};

ComplexSpec build_complex(const ReebDatum& datum, const Rational& L);

// F2 / F2[t] differential data, keyed by generator keys.
struct DifferentialCounts {
  std::map<std::pair<std::string, std::string>, long long> entries;
  // (from,to) -> list of (t exponent, count); reduced mod 2 on verification
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<long long, long long>>> t_entries;
  bool has_t_entries = false;

  static DifferentialCounts from_json(const nlohmann::json& j);
};

struct DifferentialVerdict {
  bool pass = false;
  std::string reason;
  std::string witness_from, witness_to;           // offending pair on failure
  std::vector<std::string> middle_expansion;      // middles contributing to the witness
};

// Checks grading (strict action decrease, h1 preservation) and d^2 = 0 over F2.
DifferentialVerdict verify_differential(const ComplexSpec& spec, const DifferentialCounts& d);

// F2[t] version: d^2 = 0 as polynomials, t-exponents >= 0, and the t = 1
// specialization must match the plain entries and pass verify_differential.
DifferentialVerdict verify_extended_differential(const ComplexSpec& spec, const DifferentialCounts& d);

}  // namespace echkit
