#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "echkit/half_int.hpp"

namespace echkit {

enum class BraidBase { circle, interval };

// Piecewise-linear strand: samples (t, x, y) with t running over [0,1]
// (interval) or [0, wraps] (circle, closing up after `wraps` turns).
struct BraidStrand {
  long long wraps = 1;
  std::vector<std::array<double, 3>> samples;
};

struct Braid {
  BraidBase base = BraidBase::circle;
  std::vector<BraidStrand> strands;

  long long total_multiplicity() const;
  void validate() const;

  static Braid from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// Signed count of self-crossings of the projected braid diagram, anchored so
// the two-strand full counterclockwise twist has writhe +2.
HalfInt writhe(const Braid& b);

// Half the signed count of crossings between the two projected braids.
HalfInt linking(const Braid& b1, const Braid& b2);

// Total rotation angle / 2pi of one strand, exact half-integer. Circle
// strands produce integers, interval strands (endpoints on the x-axis)
// half-integers.
HalfInt winding(const BraidStrand& strand);
std::vector<HalfInt> windings(const Braid& b);

// Writhe change under a trivialization offset d on a braid of total strand
// multiplicity m: m(m-1)*d.
HalfInt writhe_transform_delta(long long m, HalfInt d);

// Insert d full twists (t, z) -> (t, e^{2 pi i d t} z). Integral d for circle
// braids; interval braids accept half-integral d.
Braid twisted(const Braid& b, HalfInt d);

// One eigenmode contribution to an asymptotic strand: e^{lambda*s0} * e(t).
struct EigenMode {
  double lambda = 0.0;
  std::vector<std::array<double, 2>> samples;  // e(t) on a uniform grid over [0,1]
};

// Asymptotic braid at slice s = s0 from per-strand mode lists.
Braid braid_from_modes(const std::vector<std::vector<EigenMode>>& per_strand_modes, double s0,
                       int n_samples, BraidBase base = BraidBase::interval);

struct WritheBoundReport {
  bool pass = false;
  HalfInt writhe;
  HalfInt slack;                       // -w at positive ends, +w at negative ends
  bool equality = false;               // slack 0: trivial braid expected
  std::vector<HalfInt> strand_windings;
  std::vector<std::array<long long, 2>> winding_violations;   // strand index, twice(w)
  std::vector<std::array<long long, 3>> linking_violations;   // i, j, twice(l)
};

// Writhe/winding/linking bound at a chord end in the distinguished
// trivialization: positive ends need w, wind_i, l_ij <= 0; negative ends >= 0.
WritheBoundReport writhe_bound_check(const Braid& b, int sign);

}  // namespace echkit
