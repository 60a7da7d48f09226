#include <doctest.h>

#include "echkit/index.hpp"
#include "echkit/verify.hpp"

using namespace echkit;

namespace {

ReebDatum strip_datum() {
  ReebDatum d;
  d.chords = {{"cp", HalfInt(1), Rational(2), "L1", "L1", ""},
              {"cm", HalfInt(-1), Rational(1), "L1", "L1", ""}};
  d.legendrian_components = {"L1"};
  d.validate();
  return d;
}

SurfaceClassData strip_data() {
  SurfaceClassData s;
  s.pos_end.insert("cp", 1);
  s.neg_end.insert("cm", 1);
  s.pos_partitions["cp"] = {1};
  s.neg_partitions["cm"] = {1};
  return s;
}

ReebDatum elliptic_datum(const Rational& theta) {
  ReebDatum d;
  d.orbits = {{"g", OrbitKind::elliptic, theta, 0, Rational(1), ""}};
  d.validate();
  return d;
}

}  // namespace

TEST_CASE("orbifold Euler characteristic") {
  CHECK(euler_bar(0, 1, 2, {}) == HalfInt());           // cylinder
  CHECK(euler_bar(0, 1, 0, {2}) == HalfInt());          // strip
  CHECK(euler_bar(0, 1, 0, {3}) == HalfInt(-1));        // thrice-punctured disk: -1/2
  CHECK_THROWS_AS(euler_bar(-1, 1, 0, {}), ValidationError);
}

TEST_CASE("ECH index evaluations") {
  // trivial current over an elliptic orbit
  ReebDatum d = elliptic_datum(Rational(2, 5));
  SurfaceClassData triv;
  triv.pos_end.insert("g", 2);
  triv.neg_end.insert("g", 2);
  CHECK(ech_index(triv, d) == HalfInt());
  // the strip has I = 1
  CHECK(ech_index(strip_data(), strip_datum()) == HalfInt::whole(1));
  // two disjoint strips over distinct chords: all terms additive
  ReebDatum d2;
  d2.chords = {{"cp1", HalfInt(1), Rational(2), "L1", "L1", ""},
               {"cm1", HalfInt(-1), Rational(1), "L1", "L1", ""},
               {"cp2", HalfInt(1), Rational(2), "L2", "L2", ""},
               {"cm2", HalfInt(-1), Rational(1), "L2", "L2", ""}};
  d2.legendrian_components = {"L1", "L2"};
  d2.validate();
  SurfaceClassData pair;
  pair.pos_end.insert("cp1", 1);
  pair.pos_end.insert("cp2", 1);
  pair.neg_end.insert("cm1", 1);
  pair.neg_end.insert("cm2", 1);
  pair.n_components = 2;
  CHECK(ech_index(pair, d2) == HalfInt::whole(2));
}

TEST_CASE("Fredholm index evaluations") {
  // trivial strip: same chord at both ends
  ReebDatum d;
  d.chords = {{"c", HalfInt(1), Rational(1), "L1", "L1", ""}};
  d.legendrian_components = {"L1"};
  d.validate();
  SurfaceClassData triv;
  triv.pos_end.insert("c", 1);
  triv.neg_end.insert("c", 1);
  triv.pos_partitions["c"] = {1};
  triv.neg_partitions["c"] = {1};
  CHECK(fredholm_index(triv, d) == HalfInt());
  CHECK(fredholm_index(strip_data(), strip_datum()) == HalfInt::whole(1));
  ReebDatum de = elliptic_datum(Rational(2, 5));
  SurfaceClassData cyl;
  cyl.pos_end.insert("g", 1);
  cyl.neg_end.insert("g", 1);
  cyl.pos_partitions["g"] = {1};
  cyl.neg_partitions["g"] = {1};
  CHECK(fredholm_index(cyl, de) == HalfInt());
}

TEST_CASE("adjunction residual") {
  CHECK(adjunction_residual(strip_data(), strip_datum()) == HalfInt());
  SurfaceClassData with_delta = strip_data();
  with_delta.delta = 1;
  CHECK(adjunction_residual(with_delta, strip_datum()) == HalfInt::whole(2));
  SurfaceClassData with_eps = strip_data();
  with_eps.epsilon = 1;
  CHECK(adjunction_residual(with_eps, strip_datum()) == HalfInt::whole(1));
  // multi-strand ends need braid data
  ReebDatum de = elliptic_datum(Rational(2, 5));
  SurfaceClassData multi;
  multi.pos_end.insert("g", 2);
  multi.neg_end.insert("g", 2);
  multi.pos_partitions["g"] = {1, 1};
  multi.neg_partitions["g"] = {2};
  CHECK_THROWS_AS(adjunction_residual(multi, de), ValidationError);
}

TEST_CASE("index inequality checker") {
  auto rep = index_inequality_check(strip_data(), strip_datum());
  CHECK(rep.pass);
  CHECK(rep.slack == HalfInt());
  CHECK(rep.equality);
  REQUIRE(rep.partition_conditions.has_value());
  CHECK(rep.partition_conditions->pass);
  // trivial cylinder
  ReebDatum de = elliptic_datum(Rational(2, 5));
  SurfaceClassData cyl;
  cyl.pos_end.insert("g", 1);
  cyl.neg_end.insert("g", 1);
  cyl.pos_partitions["g"] = {1};
  cyl.neg_partitions["g"] = {1};
  auto rep2 = index_inequality_check(cyl, de);
  CHECK(rep2.pass);
  CHECK(rep2.slack == HalfInt());
  // a (1,1) negative end at theta = 5/8 with m = 2: evaluate both CZ sums
  ReebDatum d58 = elliptic_datum(Rational(5, 8));
  SurfaceClassData s;
  s.pos_end.insert("g", 2);
  s.neg_end.insert("g", 2);
  s.pos_partitions["g"] = {2};
  s.neg_partitions["g"] = {1, 1};
  auto rep3 = index_inequality_check(s, d58);
  // oracle: I = 0; chi_bar = -1; ind = 1 + CZ(g^2) - 2 CZ(g) = 1 + 3 - 2 = 2
  CHECK(rep3.I == HalfInt());
  CHECK(rep3.ind == HalfInt::whole(2));
  CHECK(rep3.slack == HalfInt::whole(-2));
  CHECK_FALSE(rep3.pass);
}

TEST_CASE("union index checker") {
  ReebDatum de = elliptic_datum(Rational(5, 8));
  // disjoint trivial currents: equality
  SurfaceClassData t1, t2;
  t1.pos_end.insert("g", 1);
  t1.neg_end.insert("g", 1);
  t2 = t1;
  auto rep = union_index_check(t1, t2, de, HalfInt(), HalfInt(), HalfInt());
  CHECK(rep.pass);
  // stacked ends cancel: [CZ^ECH(2) - 2 CZ^ECH(1)] appears at both ends
  CHECK(rep.slack == HalfInt());
  CHECK(rep.I_union == rep.I_c + rep.I_d);
  // currents sharing only a positive elliptic end
  SurfaceClassData c, d;
  c.pos_end.insert("g", 1);
  d.pos_end.insert("g", 1);
  auto rep2 = union_index_check(c, d, de, HalfInt(), HalfInt(), HalfInt());
  CHECK(rep2.pass);
  // superadditivity slack = CZ^ECH((g,2)) - 2 CZ^ECH((g,1)) = (1+3) - 2 = 2
  CHECK(rep2.slack == HalfInt::whole(2));
  // violated input relation
  CHECK_THROWS_AS(union_index_check(c, d, de, HalfInt::whole(1), HalfInt(), HalfInt()),
                  ValidationError);
}

TEST_CASE("index ambiguity") {
  CHECK(index_ambiguity({HalfInt(), HalfInt()}) == HalfInt());
  CHECK(index_ambiguity({HalfInt::whole(2), HalfInt(1)}) == HalfInt::whole(2));
  CHECK(index_ambiguity({HalfInt::whole(1), HalfInt()}) == HalfInt(1));
}

TEST_CASE("topological index bound") {
  auto rep = topological_bound_check(strip_data(), strip_datum());
  CHECK(rep.pass);
  CHECK(rep.lhs == HalfInt());
  CHECK(rep.rhs == HalfInt());
  // an elliptic double end contributes CZ^ECH((g,1)) = 1 after decrement
  ReebDatum d58 = elliptic_datum(Rational(5, 8));
  SurfaceClassData s;
  s.pos_end.insert("g", 2);
  s.pos_partitions["g"] = {2};
  auto rep2 = topological_bound_check(s, d58);
  CHECK(rep2.rhs == HalfInt::whole(1));
  CHECK(rep2.pass);
  // huge genus forces a failure
  SurfaceClassData heavy = s;
  heavy.genus = 50;
  CHECK_FALSE(topological_bound_check(heavy, d58).pass);
  // non-generator ends are a precondition error
  ReebDatum dh;
  dh.orbits = {{"h", OrbitKind::pos_hyperbolic, Rational(), 0, Rational(1), ""}};
  dh.validate();
  SurfaceClassData bad;
  bad.pos_end.insert("h", 2);
  bad.pos_partitions["h"] = {1, 1};
  CHECK_THROWS_AS(topological_bound_check(bad, dh), ValidationError);
}

TEST_CASE("trivialization change table") {
  ReebDatum d = strip_datum();
  SurfaceClassData s = strip_data();
  TrivializationOffset zero;
  SurfaceClassData same = apply_trivialization_change(s, d, zero);
  CHECK(same.mu == s.mu);
  CHECK(same.q == s.q);
  TrivializationOffset offs;
  offs.per_element["cp"] = HalfInt::whole(1);
  SurfaceClassData moved = apply_trivialization_change(s, d, offs);
  CHECK(moved.mu == HalfInt::whole(-2));
  CHECK(moved.q == HalfInt::whole(-1));
  CHECK(cz_ech_set(s.pos_end, d, offs) - cz_ech_set(s.pos_end, d) == HalfInt::whole(2));
  CHECK(ech_index(moved, d, offs) == HalfInt::whole(1));
  // elliptic (g,2) end with d = 1: dQ = -4, dmu = -4, dCZ^ECH = +6, dI = 0
  ReebDatum de = elliptic_datum(Rational(5, 8));
  SurfaceClassData e2;
  e2.pos_end.insert("g", 2);
  TrivializationOffset d1;
  d1.per_element["g"] = HalfInt::whole(1);
  SurfaceClassData e2m = apply_trivialization_change(e2, de, d1);
  CHECK(e2m.q - e2.q == HalfInt::whole(-4));
  CHECK(e2m.mu - e2.mu == HalfInt::whole(-4));
  CHECK(cz_ech_set(e2.pos_end, de, d1) - cz_ech_set(e2.pos_end, de) == HalfInt::whole(6));
  CHECK(ech_index(e2m, de, d1) == ech_index(e2, de));
}

TEST_CASE("gluing count parity") {
  ReebDatum d = verify::mixed_datum();
  OrbitChordSet e5;
  e5.insert("e1", 5);
  CHECK(gluing_count_parity(e5, d) == Parity::odd);
  OrbitChordSet h2;
  h2.insert("hp", 2);
  CHECK(gluing_count_parity(h2, d) == Parity::even);
  OrbitChordSet c1;
  c1.insert("c1", 1);
  CHECK(gluing_count_parity(c1, d) == Parity::odd);
  OrbitChordSet c2;
  c2.insert("c1", 2);
  CHECK_THROWS_AS(gluing_count_parity(c2, d), ValidationError);
}

TEST_CASE("surface data JSON round-trip") {
  SurfaceClassData s = strip_data();
  s.mu = HalfInt(3);
  s.q = HalfInt(-1);
  s.delta = 1;
  SurfaceClassData back = SurfaceClassData::from_json(s.to_json());
  CHECK(back.mu == s.mu);
  CHECK(back.q == s.q);
  CHECK(back.delta == 1);
  CHECK(back.pos_end == s.pos_end);
  CHECK(back.pos_partitions.at("cp") == std::vector<long long>{1});
}
