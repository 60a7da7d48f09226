#include <doctest.h>

#include <cmath>

#include "echkit/angle.hpp"
#include "echkit/asymptotic.hpp"

using namespace echkit;

TEST_CASE("discretize validates its inputs") {
  CHECK_THROWS_AS(discretize(model_matrix(0), 0, 0, 10), ValidationError);
  MatrixFn asym = [](double) { return std::array<double, 4>{0, 1, 0, 0}; };
  CHECK_THROWS_AS(discretize(asym, 0, 0, 64), ValidationError);
  AsymptoticOperator op = discretize(model_matrix(0), 0, 0, 64);
  CHECK(op.ndof == 128);
}

TEST_CASE("S = 0 has the constant x-axis kernel section") {
  MatrixFn zero = [](double) { return std::array<double, 4>{0, 0, 0, 0}; };
  AsymptoticOperator op = discretize(zero, 0, 0, 64);
  auto spec = spectrum_window(op, -0.1, 0.1);
  REQUIRE(spec.size() == 1);
  CHECK(std::fabs(spec[0].lambda) < 1e-9);
  CHECK(spec[0].winding == HalfInt());
  for (const auto& v : spec[0].vector) {
    CHECK(std::fabs(v[1]) < 1e-9);
    CHECK(v[0] > 0.5);
  }
  // the kernel makes cz_from_spectrum refuse
  CHECK_THROWS_AS(cz_from_spectrum(op), ValidationError);
  // and cz_via_path reports the degenerate path
  CHECK_THROWS_AS(cz_via_path(zero), ValidationError);
}

TEST_CASE("model operator spectrum and windings") {
  AsymptoticOperator op = discretize(model_matrix(0), 0, 0, 256);
  auto spec = spectrum_window(op, -2 * kPi, 2 * kPi);
  REQUIRE(spec.size() == 4);
  double expected[] = {-3 * kPi / 2, -kPi / 2, kPi / 2, 3 * kPi / 2};
  long long windings[] = {-1, 0, 1, 2};  // in halves
  for (int i = 0; i < 4; ++i) {
    CHECK(std::fabs(spec[i].lambda - expected[i]) < 1e-6 * (1 + std::fabs(expected[i])));
    CHECK(spec[i].winding == HalfInt(windings[i]));
    CHECK(eigen_winding(spec[i], op) == spec[i].winding);
  }
  // empty window
  CHECK(spectrum_window(op, 2.0, 2.1).empty());
  CHECK_THROWS_AS(spectrum_window(op, 1.0, -1.0), ValidationError);
}

TEST_CASE("smallest positive eigenvalue of the l=1 model") {
  AsymptoticOperator op = discretize(model_matrix(1), 0, 0, 256);
  auto spec = spectrum_window(op, 0.01, kPi);
  REQUIRE(spec.size() == 1);
  CHECK(std::fabs(spec[0].lambda - kPi / 2) < 1e-6);
  CHECK(spec[0].winding == HalfInt(2));  // (l+1)/2 with l = 1
}

TEST_CASE("cz_from_spectrum matches l + 1/2 on the models") {
  for (long long l : {-1LL, 0LL, 3LL}) {
    AsymptoticOperator op = discretize(model_matrix(l), 0, 0, 256);
    CHECK(cz_from_spectrum(op) == HalfInt(2 * l + 1));
  }
}

TEST_CASE("cz_via_path matches the model values") {
  CHECK(cz_via_path(model_matrix(0)) == HalfInt(1));
  CHECK(cz_via_path(model_matrix(2)) == HalfInt(5));
}

TEST_CASE("mixed boundary lines (x-axis to y-axis)") {
  MatrixFn zero = [](double) { return std::array<double, 4>{0, 0, 0, 0}; };
  AsymptoticOperator op = discretize(zero, 0.0, kPi / 2, 256);
  auto spec = spectrum_window(op, -2 * kPi, 2 * kPi);
  REQUIRE(spec.size() == 4);
  double expected[] = {-3 * kPi / 2, -kPi / 2, kPi / 2, 3 * kPi / 2};
  long long windings[] = {-2, -1, 0, 1};  // completed half-turns beyond the coset
  for (int i = 0; i < 4; ++i) {
    CHECK(std::fabs(spec[i].lambda - expected[i]) < 1e-6 * (1 + std::fabs(expected[i])));
    CHECK(spec[i].winding == HalfInt(windings[i]));
  }
}

TEST_CASE("doubling the grid from 2000 to 4000 moves no eigenvalue past 1e-4(1+|l|)") {
  AsymptoticOperator coarse = discretize(model_matrix(1), 0, 0, 2000);
  AsymptoticOperator fine = discretize(model_matrix(1), 0, 0, 4000);
  auto s1 = spectrum_window(coarse, -5 * kPi, 5 * kPi);
  auto s2 = spectrum_window(fine, -5 * kPi, 5 * kPi);
  REQUIRE(s1.size() == s2.size());
  for (size_t i = 0; i < s1.size(); ++i) {
    CHECK(std::fabs(s1[i].lambda - s2[i].lambda) < 1e-4 * (1 + std::fabs(s2[i].lambda)));
    CHECK(s1[i].winding == s2[i].winding);
  }
}
