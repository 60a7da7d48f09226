#include <doctest.h>

#include <random>

#include "echkit/reeb.hpp"

using namespace echkit;

namespace {

ReebDatum two_element_datum() {
  ReebDatum d;
  d.orbits = {{"e", OrbitKind::elliptic, Rational(2, 5), 0, Rational(3, 2), "g"}};
  d.chords = {{"c", HalfInt(1), Rational(1), "L1", "L1", "h"}};
  d.legendrian_components = {"L1"};
  d.validate();
  return d;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(7, 2) * Rational(2, 7)).is_integer());
  CHECK(Rational(-5, 2).floor() == -3);
  CHECK(Rational(-5, 2).ceil() == -2);
  CHECK(Rational(5, 8).str() == "5/8");
  CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
  CHECK_THROWS_AS(Rational::parse("x"), ValidationError);
}

TEST_CASE("half-integer arithmetic is associative, commutative, distributive") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    HalfInt a((long long)(rng() % 41) - 20), b((long long)(rng() % 41) - 20),
        c((long long)(rng() % 41) - 20);
    long long k = (long long)(rng() % 11) - 5;
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(k * (a + b) == k * a + k * b);
    CHECK(a - b == -(b - a));
  }
  CHECK(HalfInt(3).is_strict_half());
  CHECK(HalfInt(4).is_integer());
  CHECK(HalfInt(4).to_integer() == 2);
  CHECK_THROWS_AS(HalfInt(3).to_integer(), ValidationError);
  // products stay exact and refuse to leave (1/2)Z
  CHECK(HalfInt(1) * HalfInt(4) == HalfInt(2));
  CHECK_THROWS_AS(HalfInt(1) * HalfInt(1), ValidationError);
}

TEST_CASE("action_of sums multiplicity times action") {
  ReebDatum d = two_element_datum();
  CHECK(action_of(OrbitChordSet{}, d) == Rational(0));
  OrbitChordSet e2;
  e2.insert("e", 2);
  CHECK(action_of(e2, d) == Rational(3));
  OrbitChordSet ec;
  ec.insert("e", 1);
  ec.insert("c", 1);
  CHECK(action_of(ec, d) == Rational(5, 2));
  OrbitChordSet bad;
  bad.insert("zz", 1);
  CHECK_THROWS_WITH_AS(action_of(bad, d), "unknown orbit or chord 'zz'", ValidationError);
}

TEST_CASE("set_union adds multiplicities pointwise") {
  ReebDatum d = two_element_datum();
  OrbitChordSet x;
  x.insert("e", 1);
  CHECK(set_union(OrbitChordSet{}, x) == x);
  OrbitChordSet a, b;
  a.insert("e", 1);
  b.insert("e", 2);
  CHECK(set_union(a, b).multiplicity("e") == 3);
  OrbitChordSet c;
  c.insert("c", 1);
  OrbitChordSet u = set_union(a, c);
  CHECK(u.multiplicity("e") == 1);
  CHECK(u.multiplicity("c") == 1);
  // action is additive over union
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    OrbitChordSet s1, s2;
    if (rng() % 2) s1.insert("e", 1 + rng() % 3);
    if (rng() % 2) s1.insert("c", 1 + rng() % 3);
    if (rng() % 2) s2.insert("e", 1 + rng() % 3);
    if (rng() % 2) s2.insert("c", 1 + rng() % 3);
    CHECK(action_of(set_union(s1, s2), d) == action_of(s1, d) + action_of(s2, d));
  }
}

TEST_CASE("trivialization_difference is the weighted offset sum") {
  TrivializationOffset zero;
  OrbitChordSet g3;
  g3.insert("g", 3);
  CHECK(trivialization_difference(zero, g3) == HalfInt());
  TrivializationOffset d1;
  d1.per_element["g"] = HalfInt::whole(1);
  CHECK(trivialization_difference(d1, g3) == HalfInt::whole(3));
  TrivializationOffset dh;
  dh.per_element["c"] = HalfInt(1);
  OrbitChordSet c2;
  c2.insert("c", 2);
  CHECK(trivialization_difference(dh, c2) == HalfInt::whole(1));
  // linear in the multiset
  OrbitChordSet both = set_union(g3, c2);
  TrivializationOffset mixed;
  mixed.per_element["g"] = HalfInt::whole(1);
  mixed.per_element["c"] = HalfInt(1);
  CHECK(trivialization_difference(mixed, both) ==
        trivialization_difference(mixed, g3) + trivialization_difference(mixed, c2));
}

TEST_CASE("datum validation enforces the descriptor invariants") {
  ReebDatum d = two_element_datum();
  CHECK_NOTHROW(d.validate());
  ReebDatum bad_theta = d;
  bad_theta.orbits[0].theta = Rational(7, 5);
  CHECK_THROWS_AS(bad_theta.validate(), ValidationError);
  ReebDatum bad_parity = d;
  bad_parity.orbits[0] = {"h", OrbitKind::pos_hyperbolic, Rational(), 1, Rational(1), ""};
  CHECK_THROWS_AS(bad_parity.validate(), ValidationError);
  ReebDatum bad_cz = d;
  bad_cz.chords[0].cz = HalfInt::whole(1);
  CHECK_THROWS_AS(bad_cz.validate(), ValidationError);
  ReebDatum bad_comp = d;
  bad_comp.chords[0].legendrian_to = "L9";
  CHECK_THROWS_AS(bad_comp.validate(), ValidationError);
  ReebDatum dup = d;
  dup.orbits.push_back(dup.orbits[0]);
  CHECK_THROWS_AS(dup.validate(), ValidationError);
}

TEST_CASE("reeb datum JSON round-trip") {
  ReebDatum d = two_element_datum();
  ReebDatum back = ReebDatum::from_json(d.to_json());
  CHECK(back.orbits.size() == 1);
  CHECK(back.orbits[0].theta == Rational(2, 5));
  CHECK(back.chords[0].cz == HalfInt(1));
  CHECK(back.chords[0].legendrian_from == "L1");
  OrbitChordSet s;
  s.insert("e", 2);
  s.insert("c", 1);
  CHECK(OrbitChordSet::from_json(s.to_json()) == s);
  TrivializationOffset offs;
  offs.per_element["e"] = HalfInt::whole(2);
  CHECK(TrivializationOffset::from_json(offs.to_json()).of("e") == HalfInt::whole(2));
  // orbit offsets must be integral
  TrivializationOffset bad;
  bad.per_element["e"] = HalfInt(1);
  CHECK_THROWS_AS(bad.validate(d), ValidationError);
}
