#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "echkit/errors.hpp"
#include "echkit/half_int.hpp"

namespace echkit {

inline constexpr double kPi = 3.14159265358979323846;

// Exact total rotation angle of a piecewise-linear plane curve about the
// origin. Each linear segment not passing through the origin sweeps an angle
// in (-pi, pi), recovered exactly by atan2 of cross/dot.
inline double pl_total_rotation(const std::vector<std::array<double, 2>>& pts) {
  if (pts.size() < 2) return 0.0;
  double total = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double ax = pts[i][0], ay = pts[i][1];
    double bx = pts[i + 1][0], by = pts[i + 1][1];
    if ((ax == 0 && ay == 0) || (bx == 0 && by == 0))
      throw ValidationError("curve sample at the origin");
    double cross = ax * by - ay * bx;
    double dot = ax * bx + ay * by;
    if (cross == 0 && dot < 0)
      throw ValidationError("curve segment passes through the origin");
    total += std::atan2(cross, dot);
  }
  return total;
}

// Snap x to the nearest integer when within tol, otherwise report failure.
inline bool snap_to_integer(double x, double tol, long long& out) {
  double r = std::nearbyint(x);
  if (std::fabs(x - r) > tol) return false;
  out = (long long)r;
  return true;
}

// Count of completed half-turns of a rotation by `delta` radians whose
// endpoint is constrained to the coset delta0 + pi*Z (delta0 in [0,pi)).
// For delta0 == 0 this is the exact half-turn count of a curve that starts
// and ends on the x-axis.
inline long long half_turns_in_coset(double delta, double delta0, double tol_halfturns) {
  double k = (delta - delta0) / kPi;
  long long out;
  if (!snap_to_integer(k, tol_halfturns, out))
    throw NumericError("rotation " + std::to_string(delta) +
                       " is not within tolerance of the boundary coset; refine the resolution");
  return out;
}

}  // namespace echkit
