#include <doctest.h>

#include "echkit/partitions.hpp"
#include "echkit/verify.hpp"

using namespace echkit;

namespace {

OrbitDescriptor elliptic(const Rational& theta) {
  return {"e", OrbitKind::elliptic, theta, 0, Rational(1), ""};
}

}  // namespace

TEST_CASE("positive partitions from the lattice hull") {
  CHECK(partition_positive(Rational(1, 7), 3) == Partition({3}));
  CHECK(partition_positive(Rational(5, 8), 3) == Partition({2, 1}));
  CHECK(partition_positive(Rational(2, 5), 3) == Partition({3}));
  // against the brute-force lattice-path oracle
  CHECK(verify::oracle_partition_positive(Rational(1, 7), 3) == Partition({3}));
  CHECK(verify::oracle_partition_positive(Rational(5, 8), 3) == Partition({2, 1}));
  CHECK(verify::oracle_partition_positive(Rational(2, 5), 3) == Partition({3}));
}

TEST_CASE("negative partitions from the reflected construction") {
  CHECK(partition_negative(Rational(1, 7), 2) == Partition({1, 1}));
  CHECK(partition_negative(Rational(5, 8), 1) == Partition({1}));
  CHECK(partition_negative(Rational(2, 5), 2) == Partition({1, 1}));
  CHECK(verify::oracle_partition_negative(Rational(1, 7), 2) == Partition({1, 1}));
  CHECK(verify::oracle_partition_negative(Rational(2, 5), 2) == Partition({1, 1}));
}

TEST_CASE("degeneracy guard names the offending iterate") {
  CHECK_THROWS_WITH_AS(partition_positive(Rational(1, 3), 3),
                       "degenerate theta: 3*1/3 is an integer", ValidationError);
  CHECK_THROWS_AS(partition_negative(Rational(1, 2), 2), ValidationError);
}

TEST_CASE("partitions for hyperbolic orbits follow the tables") {
  OrbitDescriptor hp{"hp", OrbitKind::pos_hyperbolic, Rational(), 0, Rational(1), ""};
  OrbitDescriptor hm{"hm", OrbitKind::neg_hyperbolic, Rational(), 1, Rational(1), ""};
  for (EndSign s : {EndSign::positive, EndSign::negative}) {
    CHECK(partition_for_orbit(hp, 3, s) == Partition({1, 1, 1}));
    CHECK(partition_for_orbit(hm, 5, s) == Partition({2, 2, 1}));
    CHECK(partition_for_orbit(hm, 4, s) == Partition({2, 2}));
  }
}

TEST_CASE("branched cover index over the trivial cylinder") {
  OrbitDescriptor e = elliptic(Rational(5, 8));
  for (long long m = 1; m <= 4; ++m)
    CHECK(cover_index(e, Partition({m}), Partition({m}), 0, 1) == 0);
  CHECK(cover_index(e, Partition({2}), Partition({1, 1}), 0, 1) == 2);
  CHECK(cover_index(e, Partition({1, 1}), Partition({2}), 0, 1) == 0);
  CHECK_THROWS_AS(cover_index(e, Partition({2}), Partition({1, 1, 1}), 0, 1), ValidationError);
}

TEST_CASE("partition partial order") {
  OrbitDescriptor e = elliptic(Rational(5, 8));
  CHECK(partition_leq(e, Partition({2}), Partition({2})));  // trivial cover
  CHECK(partition_leq(e, Partition({1, 1}), Partition({2})));
  CHECK_FALSE(partition_leq(e, Partition({2}), Partition({1, 1})));
  CHECK_THROWS_AS(partition_leq(e, Partition({9}), Partition({9})), ValidationError);
  // multi-component route: (1,1,1) < (2,1) at 5/8 via an index-0 cover plus a
  // trivial cylinder
  CHECK(partition_leq(e, Partition({1, 1, 1}), Partition({2, 1})));
}

TEST_CASE("partition conditions checker") {
  ReebDatum d;
  d.orbits = {{"hp", OrbitKind::pos_hyperbolic, Rational(), 0, Rational(1), ""},
              {"hm", OrbitKind::neg_hyperbolic, Rational(), 1, Rational(1), ""}};
  d.chords = {{"c", HalfInt(1), Rational(1), "L", "L", ""}};
  d.legendrian_components = {"L"};
  d.validate();
  auto v1 = check_partition_conditions({{"hp", EndSign::positive, {1, 1}}}, d);
  CHECK(v1.pass);
  auto v2 = check_partition_conditions({{"hm", EndSign::negative, {1, 1}}}, d);
  CHECK_FALSE(v2.pass);
  CHECK(v2.ends[0].expected == Partition({2}));
  auto v3 = check_partition_conditions({{"c", EndSign::negative, {1}}}, d);
  CHECK(v3.pass);
  auto v4 = check_partition_conditions({{"c", EndSign::negative, {1, 1}}}, d);
  CHECK_FALSE(v4.pass);
  auto v5 = check_partition_conditions({{"c", EndSign::positive, {1, 1}}}, d);
  CHECK(v5.pass);  // positive chord ends carry no multiplicity-one requirement
}

TEST_CASE("hull invariants across the rational sweep") {
  for (long long q = 2; q <= 9; ++q)
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational theta(p, q);
      for (long long m = 1; m < q && m <= 6; ++m) {
        Partition pos = partition_positive(theta, m);
        CHECK(pos.total() == m);
        for (size_t i = 0; i + 1 < pos.parts.size(); ++i)
          CHECK(pos.parts[i] >= pos.parts[i + 1]);
        if (theta < Rational(1, m)) CHECK(pos == Partition({m}));
      }
    }
}
