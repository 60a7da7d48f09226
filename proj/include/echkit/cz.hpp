#pragma once

#include <utility>
#include <vector>

#include "echkit/reeb.hpp"

namespace echkit {

// Path of Lagrangian lines e^{i theta(t)} R in C, given by angle samples at
// strictly increasing parameters t from 0 to 1. Samples must be dense enough
// that consecutive angle jumps stay below pi/2, which makes the winding count
// unambiguous.
struct LagrangianPath {
  std::vector<std::pair<double, double>> samples;  // (t, theta)

  void validate() const;
  double total_angle() const;      // theta(1) - theta(0) along the path
  bool endpoints_transverse() const;
};

// CZ(gamma^k) in the trivialization shifted by `offset` from the reference
// one: elliptic 2*floor(k*theta)+1 + 2k*d, hyperbolic k*r + 2k*d.
long long cz_orbit_iterate(const OrbitDescriptor& orbit, long long k, HalfInt offset = HalfInt());

// CZ of a non-degenerate Lagrangian path: Maslov index of the closed-up loop
// plus 1/2. Equals floor(total_angle/pi) + 1/2.
HalfInt cz_lagrangian_path(const LagrangianPath& path);

// CZ^ECH of a chord entry (c,m) from the chord's CZ.
HalfInt cz_ech_chord(HalfInt cz, long long m);

// CZ^ECH of an orbit entry (gamma,m): sum of iterate indices.
long long cz_ech_orbit(const OrbitDescriptor& orbit, long long m, HalfInt offset = HalfInt());

// CZ^ECH of an orbit-chord multiset; chord offsets shift the chord CZ by 2d.
HalfInt cz_ech_set(const OrbitChordSet& set, const ReebDatum& datum,
                   const TrivializationOffset& offsets = {});

// Sum of CZ over the iterates prescribed by end partitions; chords
// contribute their CZ once per strand.
using SetWithPartitions = std::vector<std::pair<std::string, std::vector<long long>>>;
HalfInt cz_ind_set(const SetWithPartitions& set_with_partitions, const ReebDatum& datum,
                   const TrivializationOffset& offsets = {});

// CZ^ECH under offset d minus CZ^ECH under zero offset: m(m+1)*d for every
// element kind.
HalfInt cz_ech_change(long long m, HalfInt offset_d);

}  // namespace echkit
