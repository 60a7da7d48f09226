#include "echkit/cz.hpp"

#include <cmath>

#include "echkit/angle.hpp"

namespace echkit {

void LagrangianPath::validate() const {
  if (samples.size() < 2) throw ValidationError("Lagrangian path needs at least two samples");
  if (std::fabs(samples.front().first) > 1e-12 || std::fabs(samples.back().first - 1.0) > 1e-12)
    throw ValidationError("Lagrangian path parameter must run from 0 to 1");
  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    if (!(samples[i].first < samples[i + 1].first))
      throw ValidationError("Lagrangian path parameters must be strictly increasing");
    if (std::fabs(samples[i + 1].second - samples[i].second) >= kPi / 2)
      throw ValidationError("Lagrangian path angle jump >= pi/2 between consecutive samples; sample more densely");
  }
}

double LagrangianPath::total_angle() const { return samples.back().second - samples.front().second; }

bool LagrangianPath::endpoints_transverse() const {
  double x = total_angle() / kPi;
  return std::fabs(x - std::nearbyint(x)) > 1e-9;
}

long long cz_orbit_iterate(const OrbitDescriptor& orbit, long long k, HalfInt offset) {
  if (k < 1) throw ValidationError("iterate order must be >= 1");
  long long base;
  if (orbit.kind == OrbitKind::elliptic)
    base = 2 * (Rational(k) * orbit.theta).floor() + 1;
  else
    base = k * orbit.r;
  // 2k*d is always an integer for d in (1/2)Z
  return base + k * offset.twice();
}

HalfInt cz_lagrangian_path(const LagrangianPath& path) {
  path.validate();
  double delta = path.total_angle();
  double x = delta / kPi;
  if (std::fabs(x - std::nearbyint(x)) < 1e-9)
    throw ValidationError("degenerate Lagrangian path: endpoints are not transverse");
  long long maslov = (long long)std::floor(x);
  return HalfInt(2 * maslov + 1);
}

HalfInt cz_ech_chord(HalfInt cz, long long m) {
  if (m < 1) throw ValidationError("chord multiplicity must be >= 1");
  if (!cz.is_strict_half())
    throw ValidationError("chord CZ must be a strict half-integer, got " + cz.str());
  // m/2 + m(m+1)/2 * (cz - 1/2); the second factor is an integer
  long long shifted = (cz - HalfInt(1)).to_integer();  // cz - 1/2 in Z
  return HalfInt(m) + HalfInt(m * (m + 1) * shifted);
}

long long cz_ech_orbit(const OrbitDescriptor& orbit, long long m, HalfInt offset) {
  if (m < 1) throw ValidationError("orbit multiplicity must be >= 1");
  long long total = 0;
  for (long long i = 1; i <= m; ++i) total += cz_orbit_iterate(orbit, i, offset);
  return total;
}

HalfInt cz_ech_set(const OrbitChordSet& set, const ReebDatum& datum, const TrivializationOffset& offsets) {
  set.validate(datum);
  HalfInt total;
  for (const auto& [name, m] : set.entries) {
    if (datum.is_orbit(name)) {
      total += HalfInt::whole(cz_ech_orbit(datum.orbit(name), m, offsets.of(name)));
    } else {
      HalfInt cz = datum.chord(name).cz + 2 * offsets.of(name);  // CZ shifts by 2d
      total += cz_ech_chord(cz, m);
    }
  }
  return total;
}

HalfInt cz_ind_set(const SetWithPartitions& set_with_partitions, const ReebDatum& datum,
                   const TrivializationOffset& offsets) {
  HalfInt total;
  for (const auto& [name, parts] : set_with_partitions) {
    if (parts.empty()) throw ValidationError("empty partition for '" + name + "'");
    if (datum.is_orbit(name)) {
      const auto& o = datum.orbit(name);
      for (long long a : parts) total += HalfInt::whole(cz_orbit_iterate(o, a, offsets.of(name)));
    } else {
      HalfInt cz = datum.chord(name).cz + 2 * offsets.of(name);
      for (long long a : parts) {
        if (a != 1)
          throw ValidationError("chord '" + name + "' strand of multiplicity " + std::to_string(a) +
                                "; chord strands cover the chord once");
        total += cz;
      }
    }
  }
  return total;
}

HalfInt cz_ech_change(long long m, HalfInt offset_d) {
  if (m < 1) throw ValidationError("multiplicity must be >= 1");
  return m * (m + 1) * offset_d;
}

}  // namespace echkit
