#include "echkit/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace echkit {

std::vector<OrbitChordSet> enumerate_sets(const ReebDatum& datum, const Rational& L) {
  datum.validate();
  if (!(L > Rational(0))) throw ValidationError("action cap must be positive");
  std::vector<std::pair<std::string, Rational>> elems;
  for (const auto& o : datum.orbits) elems.emplace_back(o.name, o.action);
  for (const auto& c : datum.chords) elems.emplace_back(c.name, c.action);
  std::vector<OrbitChordSet> out;
  OrbitChordSet cur;
  std::function<void(size_t, Rational)> rec = [&](size_t i, Rational budget) {
    if (i == elems.size()) {
      out.push_back(cur);
      return;
    }
    rec(i + 1, budget);
    const auto& [name, action] = elems[i];
    Rational left = budget;
    long long m = 0;
    while (left >= action) {
      left = left - action;
      ++m;
      cur.entries[name] = m;
      rec(i + 1, left);
    }
    cur.entries.erase(name);
  };
  rec(0, L);
  std::sort(out.begin(), out.end(), [&](const OrbitChordSet& a, const OrbitChordSet& b) {
    Rational aa = action_of(a, datum), ab = action_of(b, datum);
    if (aa != ab) return aa < ab;
    return a.key() < b.key();
  });
  return out;
}

GeneratorVerdict is_ech_generator(const OrbitChordSet& set, const ReebDatum& datum) {
  set.validate(datum);
  std::map<std::string, long long> chords_on_component;
  for (const auto& [name, m] : set.entries) {
    if (datum.is_orbit(name)) {
      const auto& o = datum.orbit(name);
      if (o.kind != OrbitKind::elliptic && m != 1)
        return {false, "hyperbolic orbit '" + name + "' has multiplicity " + std::to_string(m)};
    } else {
      const auto& c = datum.chord(name);
      if (m != 1) return {false, "chord '" + name + "' has multiplicity " + std::to_string(m)};
      chords_on_component[c.legendrian_from] += 1;
      if (c.legendrian_to != c.legendrian_from) chords_on_component[c.legendrian_to] += 1;
    }
  }
  for (const auto& [comp, n] : chords_on_component)
    if (n > 1) return {false, std::to_string(n) + " chords incident to component '" + comp + "'"};
  return {true, ""};
}

std::string h1_class(const OrbitChordSet& set, const ReebDatum& datum) {
  std::map<std::string, long long> coeffs;
  for (const auto& [name, m] : set.entries) {
    const std::string& lbl = datum.h1_of_element(name);
    if (!lbl.empty() && lbl != "0") coeffs[lbl] += m;
  }
  std::string out;
  for (const auto& [lbl, c] : coeffs) {
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1) out += std::to_string(c);
    out += lbl;
  }
  return out.empty() ? "0" : out;
}

int ComplexSpec::generator_index(const std::string& key) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].key() == key) return (int)i;
  return -1;
}

ComplexSpec build_complex(const ReebDatum& datum, const Rational& L) {
  ComplexSpec spec;
  spec.datum = datum;
  spec.action_cap = L;
  for (const auto& set : enumerate_sets(datum, L)) {
    if (!is_ech_generator(set, datum).ok) continue;
    spec.class_of[set.key()] = h1_class(set, datum);
    spec.generators.push_back(set);
  }
  return spec;
}

nlohmann::json ComplexSpec::to_json() const {
  nlohmann::json j;
  j["datum"] = datum.to_json();
  j["action_cap"] = action_cap.str();
  j["generators"] = nlohmann::json::array();
  for (const auto& g : generators) {
    nlohmann::json jg;
    jg["set"] = g.to_json();
    jg["key"] = g.key();
    jg["action"] = action_of(g, datum).str();
    jg["h1_class"] = class_of.at(g.key());
    j["generators"].push_back(jg);
  }
  return j;
}

ComplexSpec ComplexSpec::from_json(const nlohmann::json& j) {
  ComplexSpec spec;
  spec.datum = ReebDatum::from_json(j.at("datum"));
  spec.action_cap = rational_from_json(j.at("action_cap"));
  for (const auto& jg : j.at("generators")) {
    OrbitChordSet g = OrbitChordSet::from_json(jg.at("set"));
    g.validate(spec.datum);
    auto verdict = is_ech_generator(g, spec.datum);
    if (!verdict.ok)
      throw ValidationError("listed generator " + g.key() + " is not admissible: " + verdict.reason);
    if (action_of(g, spec.datum) > spec.action_cap)
      throw ValidationError("listed generator " + g.key() + " exceeds the action cap");
    spec.class_of[g.key()] = h1_class(g, spec.datum);
    spec.generators.push_back(std::move(g));
  }
  return spec;
}

DifferentialCounts DifferentialCounts::from_json(const nlohmann::json& j) {
  DifferentialCounts d;
  for (const auto& je : j.value("entries", nlohmann::json::array())) {
    d.entries[{je.at("from").get<std::string>(), je.at("to").get<std::string>()}] +=
        je.at("count").get<long long>();
  }
  if (j.contains("t_entries")) {
    d.has_t_entries = true;
    for (const auto& je : j.at("t_entries")) {
      auto& terms = d.t_entries[{je.at("from").get<std::string>(), je.at("to").get<std::string>()}];
      for (const auto& jt : je.at("terms")) {
        if (!jt.is_array() || jt.size() != 2)
          throw ValidationError("t_entries terms must be [exponent, count] pairs");
        terms.emplace_back(jt[0].get<long long>(), jt[1].get<long long>());
      }
    }
  }
  return d;
}

namespace {

// sparse F2 polynomial: sorted exponents with odd coefficients
using Poly2 = std::vector<long long>;

Poly2 reduce_terms(const std::vector<std::pair<long long, long long>>& terms) {
  std::map<long long, long long> acc;
  for (const auto& [e, c] : terms) {
    if (e < 0) throw ValidationError("t-exponent " + std::to_string(e) + " is negative");
    acc[e] += c;
  }
  Poly2 p;
  for (const auto& [e, c] : acc)
    if (c % 2 != 0) p.push_back(e);
  return p;
}

Poly2 poly_add(const Poly2& a, const Poly2& b) {  // symmetric difference
  Poly2 out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Poly2 poly_mul(const Poly2& a, const Poly2& b) {
  std::map<long long, long long> acc;
  for (long long ea : a)
    for (long long eb : b) acc[ea + eb] += 1;
  Poly2 out;
  for (const auto& [e, c] : acc)
    if (c % 2 != 0) out.push_back(e);
  return out;
}

}  // namespace

DifferentialVerdict verify_differential(const ComplexSpec& spec, const DifferentialCounts& d) {
  DifferentialVerdict v;
  size_t n = spec.generators.size();
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < n; ++i) index[spec.generators[i].key()] = i;
  // mod-2 adjacency
  std::vector<std::vector<size_t>> boundary(n);
  for (const auto& [pair, count] : d.entries) {
    const auto& [from, to] = pair;
    auto fi = index.find(from);
    auto ti = index.find(to);
    if (fi == index.end()) throw ValidationError("differential endpoint '" + from + "' is not a generator");
    if (ti == index.end()) throw ValidationError("differential endpoint '" + to + "' is not a generator");
    if (count % 2 == 0) continue;
    Rational af = action_of(spec.generators[fi->second], spec.datum);
    Rational at = action_of(spec.generators[ti->second], spec.datum);
    if (!(at < af)) {
      v.pass = false;
      v.reason = "entry " + from + " -> " + to + " does not strictly decrease action";
      v.witness_from = from;
      v.witness_to = to;
      return v;
    }
    if (spec.class_of.at(from) != spec.class_of.at(to)) {
      v.pass = false;
      v.reason = "entry " + from + " -> " + to + " changes the H1 class";
      v.witness_from = from;
      v.witness_to = to;
      return v;
    }
    boundary[fi->second].push_back(ti->second);
  }
  for (size_t a = 0; a < n; ++a) {
    std::map<size_t, std::vector<size_t>> squared;  // target -> middles
    for (size_t b : boundary[a])
      for (size_t c : boundary[b]) squared[c].push_back(b);
    for (const auto& [c, middles] : squared) {
      if (middles.size() % 2 != 0) {
        v.pass = false;
        v.witness_from = spec.generators[a].key();
        v.witness_to = spec.generators[c].key();
        for (size_t b : middles) v.middle_expansion.push_back(spec.generators[b].key());
        v.reason = "d^2 != 0 from " + v.witness_from + " to " + v.witness_to;
        return v;
      }
    }
  }
  v.pass = true;
  return v;
}

DifferentialVerdict verify_extended_differential(const ComplexSpec& spec, const DifferentialCounts& d) {
  DifferentialVerdict v;
  size_t n = spec.generators.size();
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < n; ++i) index[spec.generators[i].key()] = i;
  std::map<std::pair<size_t, size_t>, Poly2> mat;
  for (const auto& [pair, terms] : d.t_entries) {
    const auto& [from, to] = pair;
    auto fi = index.find(from);
    auto ti = index.find(to);
    if (fi == index.end()) throw ValidationError("differential endpoint '" + from + "' is not a generator");
    if (ti == index.end()) throw ValidationError("differential endpoint '" + to + "' is not a generator");
    Poly2 p = reduce_terms(terms);
    if (!p.empty()) mat[{fi->second, ti->second}] = std::move(p);
  }
  // t = 1 specialization must agree with the plain entries
  for (const auto& [pair, poly] : mat) {
    const auto& key = std::make_pair(spec.generators[pair.first].key(), spec.generators[pair.second].key());
    long long plain = 0;
    auto it = d.entries.find(key);
    if (it != d.entries.end()) plain = it->second;
    if ((long long)(poly.size() % 2) != ((plain % 2 + 2) % 2)) {
      v.pass = false;
      v.witness_from = key.first;
      v.witness_to = key.second;
      v.reason = "t = 1 specialization disagrees with the plain entries at " + key.first + " -> " + key.second;
      return v;
    }
  }
  for (const auto& [pair, count] : d.entries) {
    if (count % 2 == 0) continue;
    auto fi = index.find(pair.first);
    auto ti = index.find(pair.second);
    if (fi == index.end() || ti == index.end())
      throw ValidationError("differential endpoint is not a generator");
    auto it = mat.find({fi->second, ti->second});
    if (it == mat.end() || it->second.size() % 2 == 0) {
      v.pass = false;
      v.witness_from = pair.first;
      v.witness_to = pair.second;
      v.reason = "plain entry without matching t-entry parity at " + pair.first + " -> " + pair.second;
      return v;
    }
  }
  // d^2 = 0 over F2[t]
  for (size_t a = 0; a < n; ++a) {
    std::map<size_t, Poly2> squared;
    for (const auto& [pair, pab] : mat) {
      if (pair.first != a) continue;
      size_t b = pair.second;
      for (const auto& [pair2, pbc] : mat) {
        if (pair2.first != b) continue;
        auto& acc = squared[pair2.second];
        acc = poly_add(acc, poly_mul(pab, pbc));
      }
    }
    for (const auto& [c, poly] : squared) {
      if (!poly.empty()) {
        v.pass = false;
        v.witness_from = spec.generators[a].key();
        v.witness_to = spec.generators[c].key();
        v.reason = "d^2 != 0 over F2[t] from " + v.witness_from + " to " + v.witness_to;
        return v;
      }
    }
  }
  // the specialization must itself be a valid differential
  DifferentialVerdict plain = verify_differential(spec, d);
  if (!plain.pass) return plain;
  v.pass = true;
  return v;
}

}  // namespace echkit
