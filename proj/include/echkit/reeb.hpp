#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "echkit/half_int.hpp"
#include "echkit/rational.hpp"

namespace echkit {

enum class OrbitKind { elliptic, pos_hyperbolic, neg_hyperbolic };

struct OrbitDescriptor {
  std::string name;
  OrbitKind kind = OrbitKind::elliptic;
  Rational theta;      // elliptic rotation number in (0,1), lowest terms
  long long r = 0;     // hyperbolic CZ slope; even <-> positive, odd <-> negative
  Rational action;
  std::string h1_class;

  void validate() const;
};

struct ChordDescriptor {
  std::string name;
  HalfInt cz;          // strict half-integer in the reference trivialization
  Rational action;
  std::string legendrian_from, legendrian_to;
  std::string h1_class;

  void validate() const;
};

// Catalog of simple orbits and chords of a non-degenerate contact form.
struct ReebDatum {
  std::vector<OrbitDescriptor> orbits;
  std::vector<ChordDescriptor> chords;
  std::vector<std::string> legendrian_components;

  void validate() const;

  bool has(const std::string& name) const;
  bool is_orbit(const std::string& name) const;
  bool is_chord(const std::string& name) const;
  const OrbitDescriptor& orbit(const std::string& name) const;
  const ChordDescriptor& chord(const std::string& name) const;
  Rational action_of_element(const std::string& name) const;
  const std::string& h1_of_element(const std::string& name) const;

  static ReebDatum from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// Finite multiset of simple orbits and chords with positive multiplicities.
struct OrbitChordSet {
  std::map<std::string, long long> entries;  // name -> multiplicity >= 1

  OrbitChordSet() = default;
  OrbitChordSet(std::initializer_list<std::pair<const std::string, long long>> init) : entries(init) {}

  bool empty() const { return entries.empty(); }
  long long multiplicity(const std::string& name) const {
    auto it = entries.find(name);
    return it == entries.end() ? 0 : it->second;
  }
  long long total_multiplicity() const;
  void insert(const std::string& name, long long mult);
  void validate(const ReebDatum& datum) const;

  // canonical "name^m name^m" key, or "{}" when empty
  std::string key() const;

  static OrbitChordSet from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  friend bool operator==(const OrbitChordSet& a, const OrbitChordSet& b) { return a.entries == b.entries; }
  friend bool operator<(const OrbitChordSet& a, const OrbitChordSet& b) { return a.entries < b.entries; }
};

// Per-strand difference d(eta) of two trivializations on each simple orbit
// or chord. Orbit offsets are integers; chord offsets may be strict halves.
struct TrivializationOffset {
  std::map<std::string, HalfInt> per_element;

  HalfInt of(const std::string& name) const {
    auto it = per_element.find(name);
    return it == per_element.end() ? HalfInt() : it->second;
  }
  bool is_zero() const;
  void validate(const ReebDatum& datum) const;

  static TrivializationOffset from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

Rational action_of(const OrbitChordSet& set, const ReebDatum& datum);
OrbitChordSet set_union(const OrbitChordSet& a, const OrbitChordSet& b);
HalfInt trivialization_difference(const TrivializationOffset& offsets, const OrbitChordSet& set);

// JSON helpers shared across modules.
HalfInt half_int_from_json(const nlohmann::json& j);
nlohmann::json half_int_to_json(HalfInt h);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace echkit
