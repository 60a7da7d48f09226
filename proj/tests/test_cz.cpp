#include <doctest.h>

#include <cmath>

#include "echkit/angle.hpp"
#include "echkit/cz.hpp"

using namespace echkit;

namespace {

OrbitDescriptor elliptic(const Rational& theta) {
  return {"e", OrbitKind::elliptic, theta, 0, Rational(1), ""};
}
OrbitDescriptor hyperbolic(long long r) {
  return {"h", r % 2 == 0 ? OrbitKind::pos_hyperbolic : OrbitKind::neg_hyperbolic, Rational(), r,
          Rational(1), ""};
}

LagrangianPath linear_path(double slope_halfturns) {
  // theta(t) = pi * slope_halfturns * t, sampled densely
  LagrangianPath p;
  int n = 64 * (int)(std::fabs(slope_halfturns) + 1);
  for (int i = 0; i <= n; ++i) {
    double t = (double)i / n;
    p.samples.emplace_back(t, kPi * slope_halfturns * t);
  }
  return p;
}

}  // namespace

TEST_CASE("orbit iterate indices") {
  CHECK(cz_orbit_iterate(elliptic(Rational(2, 5)), 1) == 1);
  CHECK(cz_orbit_iterate(elliptic(Rational(2, 5)), 2) == 1);
  CHECK(cz_orbit_iterate(hyperbolic(0), 5) == 0);
  CHECK(cz_orbit_iterate(hyperbolic(1), 3) == 3);
  // offset shifts by 2k d
  CHECK(cz_orbit_iterate(elliptic(Rational(2, 5)), 2, HalfInt::whole(1)) == 5);
  CHECK(cz_orbit_iterate(elliptic(Rational(2, 5)), 2, HalfInt(1)) == 3);
  CHECK_THROWS_AS(cz_orbit_iterate(elliptic(Rational(2, 5)), 0), ValidationError);
}

TEST_CASE("Lagrangian path CZ") {
  CHECK(cz_lagrangian_path(linear_path(0.5)) == HalfInt(1));    // quarter turn: 1/2
  CHECK(cz_lagrangian_path(linear_path(2.5)) == HalfInt(5));    // l = 2 model: 5/2
  CHECK(cz_lagrangian_path(linear_path(-0.5)) == HalfInt(-1));  // mirror: -1/2
  for (long long l = -3; l <= 3; ++l)
    CHECK(cz_lagrangian_path(linear_path(l + 0.5)) == HalfInt(2 * l + 1));
  // degenerate endpoints
  CHECK_THROWS_AS(cz_lagrangian_path(linear_path(1.0)), ValidationError);
  CHECK_THROWS_AS(cz_lagrangian_path(linear_path(0.0)), ValidationError);
  // density guard: two samples with a jump over pi/2
  LagrangianPath sparse;
  sparse.samples = {{0.0, 0.0}, {1.0, 2.5}};
  CHECK_THROWS_AS(cz_lagrangian_path(sparse), ValidationError);
}

TEST_CASE("ECH Conley-Zehnder term of chords") {
  CHECK(cz_ech_chord(HalfInt(1), 3) == HalfInt(3));    // (1/2, 3) -> 3/2
  CHECK(cz_ech_chord(HalfInt(-1), 2) == HalfInt(-4));  // (-1/2, 2) -> -2
  for (long long t = -9; t <= 9; t += 2)
    CHECK(cz_ech_chord(HalfInt(t), 1) == HalfInt(t));  // m = 1 collapses
  CHECK_THROWS_AS(cz_ech_chord(HalfInt::whole(1), 2), ValidationError);
}

TEST_CASE("ECH Conley-Zehnder term of orbits") {
  CHECK(cz_ech_orbit(elliptic(Rational(2, 5)), 2) == 2);
  CHECK(cz_ech_orbit(hyperbolic(0), 3) == 0);
  CHECK(cz_ech_orbit(hyperbolic(1), 2) == 3);
}

TEST_CASE("ECH Conley-Zehnder term of sets") {
  ReebDatum d;
  d.orbits = {{"g", OrbitKind::elliptic, Rational(2, 5), 0, Rational(1), ""}};
  d.chords = {{"c", HalfInt(-1), Rational(1), "L", "L", ""},
              {"b", HalfInt(3), Rational(1), "L", "L", ""}};
  d.legendrian_components = {"L"};
  d.validate();
  CHECK(cz_ech_set(OrbitChordSet{}, d) == HalfInt());
  OrbitChordSet c2;
  c2.insert("c", 2);
  CHECK(cz_ech_set(c2, d) == HalfInt(-4));
  OrbitChordSet mixed;
  mixed.insert("g", 2);
  mixed.insert("b", 1);
  CHECK(cz_ech_set(mixed, d) == HalfInt(7));  // 2 + 3/2
  // additive over union with disjoint names
  CHECK(cz_ech_set(set_union(c2, mixed), d) == cz_ech_set(c2, d) + cz_ech_set(mixed, d));
}

TEST_CASE("CZ of prescribed end partitions") {
  ReebDatum d;
  d.orbits = {{"g", OrbitKind::elliptic, Rational(2, 5), 0, Rational(1), ""}};
  d.chords = {{"c", HalfInt(1), Rational(1), "L", "L", ""}};
  d.legendrian_components = {"L"};
  CHECK(cz_ind_set({{"g", {2}}}, d) == HalfInt::whole(1));
  CHECK(cz_ind_set({{"g", {1, 1}}}, d) == HalfInt::whole(2));
  CHECK(cz_ind_set({{"c", {1}}}, d) == HalfInt(1));
  CHECK_THROWS_AS(cz_ind_set({{"c", {2}}}, d), ValidationError);
  CHECK_THROWS_AS(cz_ind_set({{"g", {}}}, d), ValidationError);
}

TEST_CASE("trivialization change of the ECH CZ term") {
  CHECK(cz_ech_change(4, HalfInt()) == HalfInt());
  CHECK(cz_ech_change(1, HalfInt::whole(1)) == HalfInt::whole(2));
  CHECK(cz_ech_change(3, HalfInt::whole(1)) == HalfInt::whole(12));
  // the telescoping identity, for every orbit kind and small offsets
  for (long long dtwice = -6; dtwice <= 6; dtwice += 2) {
    HalfInt off(dtwice);
    for (long long m = 1; m <= 8; ++m) {
      for (const auto& orbit : {elliptic(Rational(2, 5)), elliptic(Rational(5, 8)), hyperbolic(0),
                                hyperbolic(1), hyperbolic(-1)}) {
        long long with = cz_ech_orbit(orbit, m, off);
        long long without = cz_ech_orbit(orbit, m);
        CHECK(HalfInt::whole(with - without) == cz_ech_change(m, off));
      }
    }
  }
  // chord counterpart used in the writhe-bound proof:
  // CZ^ECH(c,m) - m cz = m(m-1)/2 (cz - 1/2)
  for (long long t = -9; t <= 9; t += 2)
    for (long long m = 1; m <= 8; ++m) {
      HalfInt cz(t);
      HalfInt lhs = cz_ech_chord(cz, m) - m * cz;
      HalfInt rhs = HalfInt((m * (m - 1) / 2) * (t - 1));  // (t-1)/2 = cz - 1/2 in halves
      CHECK(lhs == rhs);
    }
}
