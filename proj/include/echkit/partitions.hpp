#pragma once

#include <string>
#include <vector>

#include "echkit/reeb.hpp"

namespace echkit {

// Partition of a positive integer: parts sorted non-increasing.
struct Partition {
  std::vector<long long> parts;

  Partition() = default;
  Partition(std::initializer_list<long long> p);
  explicit Partition(std::vector<long long> p);

  long long total() const;
  size_t size() const { return parts.size(); }
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

// All partitions of m, lexicographic.
std::vector<Partition> all_partitions(long long m);

// Horizontal corner displacements of the maximal concave lattice path from
// (0,0) to (m, floor(m*theta)) below the line y = theta*x.
// Degeneracy guard: i*theta must not be an integer for 1 <= i <= m.
Partition partition_positive(const Rational& theta, long long m);

// The negated-angle counterpart: corner displacements of the minimal concave
// lattice path above the line (the upper hull of the ceiling points
// (i, ceil(i*theta))).
Partition partition_negative(const Rational& theta, long long m);

enum class EndSign { positive, negative };

// ECH partition of an orbit end: hyperbolic per the fixed tables, elliptic
// via the lattice constructions.
Partition partition_for_orbit(const OrbitDescriptor& orbit, long long m, EndSign sign);

// Fredholm index of a branched cover of the trivial cylinder over `orbit`
// with the given end partitions: -chi + sum CZ(gamma^a_i) - sum CZ(gamma^b_j),
// chi = 2*n_components - 2*genus - #ends.
long long cover_index(const OrbitDescriptor& orbit, const Partition& pos, const Partition& neg,
                      long long genus, long long n_components);

inline constexpr long long kPartitionOrderBound = 8;

// p < q iff a genus-0 (possibly multi-component) branched cover over the
// orbit exists with positive partition p, negative partition q, total index 0
// and per-component index >= 0. Exhaustive over end groupings; m capped.
bool partition_leq(const OrbitDescriptor& orbit, const Partition& p, const Partition& q);

struct EndConditionReport {
  std::string name;
  EndSign sign = EndSign::positive;
  Partition observed;
  Partition expected;   // for orbit ends
  bool pass = false;
  std::string note;
};

struct PartitionConditionsVerdict {
  bool pass = false;
  std::vector<EndConditionReport> ends;
};

struct EndSpec {
  std::string name;
  EndSign sign = EndSign::positive;
  std::vector<long long> multiplicities;  // observed strand multiplicity list
};

// Per-end check of the ECH partition conditions; chord ends must consist of
// multiplicity-1 strands and negative chord ends must have total
// multiplicity one.
PartitionConditionsVerdict check_partition_conditions(const std::vector<EndSpec>& ends,
                                                      const ReebDatum& datum);

}  // namespace echkit
