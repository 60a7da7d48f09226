#include <doctest.h>

#include "echkit/complex.hpp"

using namespace echkit;

namespace {

ReebDatum ce_datum() {
  // one chord of action 1, one elliptic orbit of action 3/2
  ReebDatum d;
  d.orbits = {{"e", OrbitKind::elliptic, Rational(2, 5), 0, Rational(3, 2), "g"}};
  d.chords = {{"c", HalfInt(1), Rational(1), "L1", "L1", "g"}};
  d.legendrian_components = {"L1"};
  d.validate();
  return d;
}

std::string keys(const std::vector<OrbitChordSet>& sets) {
  std::string out;
  for (const auto& s : sets) {
    if (!out.empty()) out += " | ";
    out += s.key();
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration below an action cap") {
  ReebDatum d = ce_datum();
  auto sets = enumerate_sets(d, Rational(3));
  CHECK(keys(sets) == "{} | c | e | c^2 | c e | c^3 | e^2");
  auto tiny = enumerate_sets(d, Rational(1, 2));
  CHECK(keys(tiny) == "{}");
  ReebDatum empty;
  CHECK(keys(enumerate_sets(empty, Rational(5))) == "{}");
}

TEST_CASE("generator admissibility") {
  ReebDatum d;
  d.orbits = {{"e", OrbitKind::elliptic, Rational(2, 5), 0, Rational(1), ""},
              {"h", OrbitKind::pos_hyperbolic, Rational(), 0, Rational(1), ""}};
  d.chords = {{"c1", HalfInt(1), Rational(1), "L1", "L1", ""},
              {"c2", HalfInt(1), Rational(1), "L1", "L1", ""}};
  d.legendrian_components = {"L1"};
  d.validate();
  OrbitChordSet e7;
  e7.insert("e", 7);
  CHECK(is_ech_generator(e7, d).ok);
  OrbitChordSet h2;
  h2.insert("h", 2);
  CHECK_FALSE(is_ech_generator(h2, d).ok);
  OrbitChordSet two_chords;
  two_chords.insert("c1", 1);
  two_chords.insert("c2", 1);
  auto v = is_ech_generator(two_chords, d);
  CHECK_FALSE(v.ok);
  CHECK(v.reason.find("L1") != std::string::npos);
}

TEST_CASE("homology class labels") {
  ReebDatum d;
  d.orbits = {{"a", OrbitKind::elliptic, Rational(1, 3), 0, Rational(1), "g"},
              {"b", OrbitKind::elliptic, Rational(1, 3), 0, Rational(1), "h"}};
  d.validate();
  CHECK(h1_class(OrbitChordSet{}, d) == "0");
  OrbitChordSet a2;
  a2.insert("a", 2);
  CHECK(h1_class(a2, d) == "2g");
  OrbitChordSet ab;
  ab.insert("a", 1);
  ab.insert("b", 1);
  CHECK(h1_class(ab, d) == "g+h");
}

TEST_CASE("build_complex filters and orders the generators") {
  ReebDatum d = ce_datum();
  ComplexSpec spec = build_complex(d, Rational(3));
  CHECK(keys(spec.generators) == "{} | c | e | c e | e^2");
  CHECK(spec.class_of.at("{}") == "0");
  ReebDatum chord_only;
  chord_only.chords = {{"c", HalfInt(1), Rational(1), "L1", "L1", ""}};
  chord_only.legendrian_components = {"L1"};
  ComplexSpec spec2 = build_complex(chord_only, Rational(1));
  CHECK(keys(spec2.generators) == "{} | c");
  // round trip
  ComplexSpec back = ComplexSpec::from_json(spec.to_json());
  CHECK(keys(back.generators) == keys(spec.generators));
  CHECK(back.action_cap == spec.action_cap);
}

namespace {

ReebDatum ladder_datum() {
  ReebDatum d;
  d.orbits = {{"a", OrbitKind::elliptic, Rational(1, 9), 0, Rational(4), "g"},
              {"b", OrbitKind::elliptic, Rational(2, 9), 0, Rational(3), "g"},
              {"c", OrbitKind::elliptic, Rational(4, 9), 0, Rational(2), "g"},
              {"d", OrbitKind::elliptic, Rational(5, 9), 0, Rational(1), "g"}};
  d.validate();
  return d;
}

}  // namespace

TEST_CASE("differential verification") {
  ComplexSpec spec = build_complex(ladder_datum(), Rational(4));
  DifferentialCounts zero;
  CHECK(verify_differential(spec, zero).pass);
  DifferentialCounts square;
  square.entries[{"a", "b"}] = 1;
  square.entries[{"a", "c"}] = 1;
  square.entries[{"b", "d"}] = 1;
  square.entries[{"c", "d"}] = 1;
  CHECK(verify_differential(spec, square).pass);  // d^2 a = 2d = 0 mod 2
  DifferentialCounts bad;
  bad.entries[{"a", "b"}] = 1;
  bad.entries[{"b", "c"}] = 1;
  auto v = verify_differential(spec, bad);
  CHECK_FALSE(v.pass);
  CHECK(v.witness_from == "a");
  CHECK(v.witness_to == "c");
  // grading violations
  DifferentialCounts up;
  up.entries[{"d", "a"}] = 1;  // action increases
  CHECK_FALSE(verify_differential(spec, up).pass);
  DifferentialCounts unknown;
  unknown.entries[{"a", "zz"}] = 1;
  CHECK_THROWS_AS(verify_differential(spec, unknown), ValidationError);
}

TEST_CASE("extended differential over F2[t]") {
  ComplexSpec spec = build_complex(ladder_datum(), Rational(4));
  DifferentialCounts zero;
  CHECK(verify_extended_differential(spec, zero).pass);
  DifferentialCounts ext;
  ext.entries[{"a", "b"}] = 1;
  ext.entries[{"a", "c"}] = 1;
  ext.entries[{"b", "d"}] = 1;
  ext.entries[{"c", "d"}] = 1;
  ext.has_t_entries = true;
  ext.t_entries[{"a", "b"}] = {{1, 1}};
  ext.t_entries[{"a", "c"}] = {{1, 1}};
  ext.t_entries[{"b", "d"}] = {{2, 1}};
  ext.t_entries[{"c", "d"}] = {{2, 1}};
  CHECK(verify_extended_differential(spec, ext).pass);  // d^2 a = 2 t^3 d = 0
  CHECK(verify_differential(spec, ext).pass);           // t = 1 specialization
  DifferentialCounts neg = ext;
  neg.t_entries[{"a", "b"}] = {{-1, 1}};
  CHECK_THROWS_AS(verify_extended_differential(spec, neg), ValidationError);
  // mismatch between t entries and the plain matrix
  DifferentialCounts mismatch = ext;
  mismatch.t_entries[{"a", "b"}] = {{1, 1}, {2, 1}};  // even total at t = 1
  CHECK_FALSE(verify_extended_differential(spec, mismatch).pass);
}
