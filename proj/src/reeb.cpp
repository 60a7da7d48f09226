#include "echkit/reeb.hpp"

#include <algorithm>
#include <set>

namespace echkit {

void OrbitDescriptor::validate() const {
  if (name.empty()) throw ValidationError("orbit with empty name");
  if (!(action > Rational(0))) throw ValidationError("orbit '" + name + "' needs action > 0");
  switch (kind) {
    case OrbitKind::elliptic:
      if (!(theta > Rational(0) && theta < Rational(1)))
        throw ValidationError("orbit '" + name + "': elliptic theta must lie in (0,1), got " + theta.str());
      break;
    case OrbitKind::pos_hyperbolic:
      if (r % 2 != 0)
        throw ValidationError("orbit '" + name + "': positive hyperbolic r must be even, got " + std::to_string(r));
      break;
    case OrbitKind::neg_hyperbolic:
      if (r % 2 == 0)
        throw ValidationError("orbit '" + name + "': negative hyperbolic r must be odd, got " + std::to_string(r));
      break;
  }
}

void ChordDescriptor::validate() const {
  if (name.empty()) throw ValidationError("chord with empty name");
  if (!cz.is_strict_half())
    throw ValidationError("chord '" + name + "': CZ must be a strict half-integer, got " + cz.str());
  if (!(action > Rational(0))) throw ValidationError("chord '" + name + "' needs action > 0");
}

void ReebDatum::validate() const {
  std::set<std::string> names;
  for (const auto& o : orbits) {
    o.validate();
    if (!names.insert(o.name).second) throw ValidationError("duplicate element name '" + o.name + "'");
  }
  for (const auto& c : chords) {
    c.validate();
    if (!names.insert(c.name).second) throw ValidationError("duplicate element name '" + c.name + "'");
  }
  std::set<std::string> comps(legendrian_components.begin(), legendrian_components.end());
  if (comps.size() != legendrian_components.size())
    throw ValidationError("duplicate legendrian component id");
  for (const auto& c : chords) {
    if (!comps.count(c.legendrian_from))
      throw ValidationError("chord '" + c.name + "' references unknown component '" + c.legendrian_from + "'");
    if (!comps.count(c.legendrian_to))
      throw ValidationError("chord '" + c.name + "' references unknown component '" + c.legendrian_to + "'");
  }
}

bool ReebDatum::has(const std::string& name) const { return is_orbit(name) || is_chord(name); }

bool ReebDatum::is_orbit(const std::string& name) const {
  return std::any_of(orbits.begin(), orbits.end(), [&](const auto& o) { return o.name == name; });
}

bool ReebDatum::is_chord(const std::string& name) const {
  return std::any_of(chords.begin(), chords.end(), [&](const auto& c) { return c.name == name; });
}

const OrbitDescriptor& ReebDatum::orbit(const std::string& name) const {
  for (const auto& o : orbits)
    if (o.name == name) return o;
  throw ValidationError("unknown orbit '" + name + "'");
}

const ChordDescriptor& ReebDatum::chord(const std::string& name) const {
  for (const auto& c : chords)
    if (c.name == name) return c;
  throw ValidationError("unknown chord '" + name + "'");
}

Rational ReebDatum::action_of_element(const std::string& name) const {
  for (const auto& o : orbits)
    if (o.name == name) return o.action;
  for (const auto& c : chords)
    if (c.name == name) return c.action;
  throw ValidationError("unknown orbit or chord '" + name + "'");
}

const std::string& ReebDatum::h1_of_element(const std::string& name) const {
  for (const auto& o : orbits)
    if (o.name == name) return o.h1_class;
  for (const auto& c : chords)
    if (c.name == name) return c.h1_class;
  throw ValidationError("unknown orbit or chord '" + name + "'");
}

long long OrbitChordSet::total_multiplicity() const {
  long long t = 0;
  for (const auto& [_, m] : entries) t += m;
  return t;
}

void OrbitChordSet::insert(const std::string& name, long long mult) {
  if (mult <= 0) throw ValidationError("multiplicity of '" + name + "' must be >= 1");
  entries[name] += mult;
}

void OrbitChordSet::validate(const ReebDatum& datum) const {
  for (const auto& [name, m] : entries) {
    if (m <= 0) throw ValidationError("multiplicity of '" + name + "' must be >= 1");
    if (!datum.has(name)) throw ValidationError("unknown orbit or chord '" + name + "'");
  }
}

std::string OrbitChordSet::key() const {
  if (entries.empty()) return "{}";
  std::string k;
  for (const auto& [name, m] : entries) {
    if (!k.empty()) k += ' ';
    k += name;
    if (m > 1) k += '^' + std::to_string(m);
  }
  return k;
}

Rational action_of(const OrbitChordSet& set, const ReebDatum& datum) {
  Rational total;
  for (const auto& [name, m] : set.entries) total = total + Rational(m) * datum.action_of_element(name);
  return total;
}

OrbitChordSet set_union(const OrbitChordSet& a, const OrbitChordSet& b) {
  OrbitChordSet u = a;
  for (const auto& [name, m] : b.entries) u.entries[name] += m;
  return u;
}

HalfInt trivialization_difference(const TrivializationOffset& offsets, const OrbitChordSet& set) {
  HalfInt total;
  for (const auto& [name, m] : set.entries) total += m * offsets.of(name);
  return total;
}

bool TrivializationOffset::is_zero() const {
  for (const auto& [_, d] : per_element)
    if (!d.is_zero()) return false;
  return true;
}

void TrivializationOffset::validate(const ReebDatum& datum) const {
  for (const auto& [name, d] : per_element) {
    if (!datum.has(name)) throw ValidationError("offset for unknown element '" + name + "'");
    if (datum.is_orbit(name) && !d.is_integer())
      throw ValidationError("orbit offset on '" + name + "' must be an integer, got " + d.str());
  }
}

// ---- JSON ----

HalfInt half_int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return HalfInt::whole(j.get<long long>());
  if (!j.is_object() || !j.contains("twice") || !j.at("twice").is_number_integer())
    throw ValidationError("half-integer must be {\"twice\": n} or an integer");
  return HalfInt(j.at("twice").get<long long>());
}

nlohmann::json half_int_to_json(HalfInt h) { return nlohmann::json{{"twice", h.twice()}}; }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ValidationError("rational must be a \"p/q\" string or an integer");
  return Rational::parse(j.get<std::string>());
}

ReebDatum ReebDatum::from_json(const nlohmann::json& j) {
  ReebDatum d;
  for (const auto& jo : j.value("orbits", nlohmann::json::array())) {
    OrbitDescriptor o;
    o.name = jo.at("name").get<std::string>();
    const auto& kind = jo.at("kind");
    if (kind.is_object() && kind.contains("elliptic")) {
      o.kind = OrbitKind::elliptic;
      o.theta = rational_from_json(kind.at("elliptic").at("theta"));
    } else if (kind.is_string() && kind.get<std::string>() == "pos_hyperbolic") {
      o.kind = OrbitKind::pos_hyperbolic;
      o.r = jo.at("r").get<long long>();
    } else if (kind.is_string() && kind.get<std::string>() == "neg_hyperbolic") {
      o.kind = OrbitKind::neg_hyperbolic;
      o.r = jo.at("r").get<long long>();
    } else {
      throw ValidationError("orbit '" + o.name + "': bad kind");
    }
    o.action = rational_from_json(jo.at("action"));
    o.h1_class = jo.value("h1_class", "");
    d.orbits.push_back(std::move(o));
  }
  for (const auto& jc : j.value("chords", nlohmann::json::array())) {
    ChordDescriptor c;
    c.name = jc.at("name").get<std::string>();
    c.cz = half_int_from_json(jc.at("cz"));
    c.action = rational_from_json(jc.at("action"));
    c.legendrian_from = jc.at("legendrian_from").get<std::string>();
    c.legendrian_to = jc.at("legendrian_to").get<std::string>();
    c.h1_class = jc.value("h1_class", "");
    d.chords.push_back(std::move(c));
  }
  for (const auto& jl : j.value("legendrian_components", nlohmann::json::array()))
    d.legendrian_components.push_back(jl.get<std::string>());
  d.validate();
  return d;
}

nlohmann::json ReebDatum::to_json() const {
  nlohmann::json j;
  j["orbits"] = nlohmann::json::array();
  for (const auto& o : orbits) {
    nlohmann::json jo;
    jo["name"] = o.name;
    switch (o.kind) {
      case OrbitKind::elliptic:
        jo["kind"] = nlohmann::json{{"elliptic", {{"theta", o.theta.str()}}}};
        break;
      case OrbitKind::pos_hyperbolic:
        jo["kind"] = "pos_hyperbolic";
        jo["r"] = o.r;
        break;
      case OrbitKind::neg_hyperbolic:
        jo["kind"] = "neg_hyperbolic";
        jo["r"] = o.r;
        break;
    }
    jo["action"] = o.action.str();
    jo["h1_class"] = o.h1_class;
    j["orbits"].push_back(jo);
  }
  j["chords"] = nlohmann::json::array();
  for (const auto& c : chords) {
    j["chords"].push_back(nlohmann::json{{"name", c.name},
                                         {"cz", half_int_to_json(c.cz)},
                                         {"action", c.action.str()},
                                         {"legendrian_from", c.legendrian_from},
                                         {"legendrian_to", c.legendrian_to},
                                         {"h1_class", c.h1_class}});
  }
  j["legendrian_components"] = legendrian_components;
  return j;
}

OrbitChordSet OrbitChordSet::from_json(const nlohmann::json& j) {
  OrbitChordSet s;
  if (!j.is_object()) throw ValidationError("orbit-chord set must be a JSON object name -> multiplicity");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_number_integer())
      throw ValidationError("multiplicity of '" + it.key() + "' must be an integer");
    s.insert(it.key(), it.value().get<long long>());
  }
  return s;
}

nlohmann::json OrbitChordSet::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, m] : entries) j[name] = m;
  return j;
}

TrivializationOffset TrivializationOffset::from_json(const nlohmann::json& j) {
  TrivializationOffset o;
  const nlohmann::json* body = &j;
  if (j.is_object() && j.contains("per_element")) body = &j.at("per_element");
  if (!body->is_object()) throw ValidationError("offsets must be a JSON object name -> {\"twice\": n}");
  for (auto it = body->begin(); it != body->end(); ++it) o.per_element[it.key()] = half_int_from_json(it.value());
  return o;
}

nlohmann::json TrivializationOffset::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, d] : per_element) j[name] = half_int_to_json(d);
  return nlohmann::json{{"per_element", j}};
}

}  // namespace echkit
