#include "echkit/index.hpp"

#include <algorithm>

#include "echkit/complex.hpp"

namespace echkit {

namespace {

void validate_partitions(const OrbitChordSet& end,
                         const std::map<std::string, std::vector<long long>>& parts,
                         const ReebDatum& datum, const char* side) {
  for (const auto& [name, list] : parts) {
    long long m = end.multiplicity(name);
    if (m == 0)
      throw ValidationError(std::string(side) + " partition for '" + name + "' without a matching end");
    long long total = 0;
    for (long long a : list) {
      if (a < 1) throw ValidationError("partition parts must be positive");
      if (datum.is_chord(name) && a != 1)
        throw ValidationError("chord '" + name + "' strands must have multiplicity 1");
      total += a;
    }
    if (total != m)
      throw ValidationError(std::string(side) + " partition of '" + name + "' sums to " +
                            std::to_string(total) + ", end multiplicity is " + std::to_string(m));
  }
}

SetWithPartitions partition_list(const OrbitChordSet& end,
                                 const std::map<std::string, std::vector<long long>>& parts) {
  SetWithPartitions out;
  for (const auto& [name, m] : end.entries) {
    auto it = parts.find(name);
    if (it == parts.end())
      throw ValidationError("missing partition for end element '" + name + "'");
    out.emplace_back(name, it->second);
  }
  return out;
}

long long strand_count(const OrbitChordSet& end,
                       const std::map<std::string, std::vector<long long>>& parts, bool orbits,
                       const ReebDatum& datum) {
  long long n = 0;
  for (const auto& [name, m] : end.entries) {
    if (datum.is_orbit(name) != orbits) continue;
    auto it = parts.find(name);
    if (it == parts.end()) throw ValidationError("missing partition for end element '" + name + "'");
    n += (long long)it->second.size();
  }
  return n;
}

// Re-expression of mu and q in the offset trivialization: per end element of
// multiplicity m and offset d, mu gains -2m*d and q gains -m^2*d at positive
// ends, with flipped signs at negative ends. The index evaluators take the
// stored mu/q as already expressed in the offset trivialization, so these
// shifts live only in apply_trivialization_change; the CZ terms are the ones
// recomputed per offsets inside the evaluators.
void effective_mu_q(const SurfaceClassData& s, const TrivializationOffset& offsets, HalfInt& mu,
                    HalfInt& q) {
  mu = s.mu;
  q = s.q;
  for (const auto& [name, m] : s.pos_end.entries) {
    HalfInt d = offsets.of(name);
    mu += (-2 * m) * d;
    q += (-m * m) * d;
  }
  for (const auto& [name, m] : s.neg_end.entries) {
    HalfInt d = offsets.of(name);
    mu += (2 * m) * d;
    q += (m * m) * d;
  }
}

OrbitChordSet decrement_multiplicities(const OrbitChordSet& set) {
  OrbitChordSet out;
  for (const auto& [name, m] : set.entries)
    if (m > 1) out.entries[name] = m - 1;
  return out;
}

}  // namespace

void SurfaceClassData::validate(const ReebDatum& datum) const {
  pos_end.validate(datum);
  neg_end.validate(datum);
  if (genus < 0) throw ValidationError("genus must be >= 0");
  if (n_components < 1) throw ValidationError("n_components must be >= 1");
  if (delta < 0 || epsilon < 0) throw ValidationError("delta and epsilon must be >= 0");
  validate_partitions(pos_end, pos_partitions, datum, "positive");
  validate_partitions(neg_end, neg_partitions, datum, "negative");
  for (const auto& [name, braid] : pos_braids) {
    if (pos_end.multiplicity(name) == 0)
      throw ValidationError("braid for '" + name + "' without a matching positive end");
    braid.validate();
  }
  for (const auto& [name, braid] : neg_braids) {
    if (neg_end.multiplicity(name) == 0)
      throw ValidationError("braid for '" + name + "' without a matching negative end");
    braid.validate();
  }
}

bool SurfaceClassData::has_partitions() const {
  for (const auto& [name, m] : pos_end.entries)
    if (!pos_partitions.count(name)) return false;
  for (const auto& [name, m] : neg_end.entries)
    if (!neg_partitions.count(name)) return false;
  return true;
}

HalfInt euler_bar(long long genus, long long n_components, long long n_interior_punctures,
                  const std::vector<long long>& boundary_circle_punctures) {
  if (genus < 0 || n_components < 1 || n_interior_punctures < 0)
    throw ValidationError("inconsistent topology counts");
  long long arcs = 0;
  for (long long k : boundary_circle_punctures) {
    if (k < 0) throw ValidationError("negative boundary puncture count");
    arcs += k;  // punctures and Lagrangian arcs alternate on each circle
  }
  long long b = (long long)boundary_circle_punctures.size();
  // homotopy Euler characteristic: boundary punctures are free
  long long chi = 2 * n_components - 2 * genus - b - n_interior_punctures;
  return HalfInt(2 * chi - arcs);
}

HalfInt derive_euler_bar(const SurfaceClassData& s, const ReebDatum& datum) {
  if (!s.has_partitions())
    throw ValidationError("end partitions are required to derive the Euler characteristic");
  long long p_int = strand_count(s.pos_end, s.pos_partitions, true, datum) +
                    strand_count(s.neg_end, s.neg_partitions, true, datum);
  long long p_chord = strand_count(s.pos_end, s.pos_partitions, false, datum) +
                      strand_count(s.neg_end, s.neg_partitions, false, datum);
  std::vector<long long> circles;
  if (p_chord > 0) circles.push_back(p_chord);
  return euler_bar(s.genus, s.n_components, p_int, circles);
}

HalfInt ech_index(const SurfaceClassData& s, const ReebDatum& datum,
                  const TrivializationOffset& offsets) {
  s.validate(datum);
  offsets.validate(datum);
  QuarterInt I(s.q);
  I += QuarterInt::half_of(s.mu);
  I += QuarterInt(cz_ech_set(s.pos_end, datum, offsets));
  I -= QuarterInt(cz_ech_set(s.neg_end, datum, offsets));
  return I.to_half_int("ECH index");
}

HalfInt fredholm_index(const SurfaceClassData& s, const ReebDatum& datum,
                       const TrivializationOffset& offsets) {
  s.validate(datum);
  offsets.validate(datum);
  if (!s.has_partitions()) throw ValidationError("Fredholm index requires end partitions");
  HalfInt ind = -derive_euler_bar(s, datum) + s.mu;
  ind += cz_ind_set(partition_list(s.pos_end, s.pos_partitions), datum, offsets);
  ind -= cz_ind_set(partition_list(s.neg_end, s.neg_partitions), datum, offsets);
  return ind;
}

HalfInt adjunction_residual(const SurfaceClassData& s, const ReebDatum& datum) {
  s.validate(datum);
  // writhe of the data: per-end braid writhes, positive minus negative;
  // single-strand ends contribute zero without braid data
  HalfInt w;
  auto end_writhe = [&](const OrbitChordSet& end, const std::map<std::string, Braid>& braids,
                        int sgn) {
    for (const auto& [name, m] : end.entries) {
      auto it = braids.find(name);
      if (it != braids.end()) {
        if (it->second.total_multiplicity() != m)
          throw ValidationError("braid multiplicity mismatch at end '" + name + "'");
        w += sgn * writhe(it->second);
      } else if (m > 1) {
        throw ValidationError("multi-strand end '" + name + "' requires braid data");
      }
    }
  };
  end_writhe(s.pos_end, s.pos_braids, +1);
  end_writhe(s.neg_end, s.neg_braids, -1);
  QuarterInt res = QuarterInt::half_of(s.mu);
  res -= QuarterInt(derive_euler_bar(s, datum));
  res -= QuarterInt(s.q);
  res -= QuarterInt(w);
  res += QuarterInt(HalfInt::whole(2 * s.delta + s.epsilon));
  return res.to_half_int("adjunction residual");
}

IndexInequalityReport index_inequality_check(const SurfaceClassData& s, const ReebDatum& datum,
                                             const TrivializationOffset& offsets) {
  IndexInequalityReport rep;
  rep.I = ech_index(s, datum, offsets);
  rep.ind = fredholm_index(s, datum, offsets);
  rep.slack = rep.I - rep.ind - HalfInt::whole(2 * s.delta + s.epsilon);
  rep.pass = rep.slack >= HalfInt();
  rep.equality = rep.slack == HalfInt();
  if (rep.equality) {
    std::vector<EndSpec> ends;
    for (const auto& [name, m] : s.pos_end.entries)
      ends.push_back({name, EndSign::positive, s.pos_partitions.at(name)});
    for (const auto& [name, m] : s.neg_end.entries)
      ends.push_back({name, EndSign::negative, s.neg_partitions.at(name)});
    rep.partition_conditions = check_partition_conditions(ends, datum);
  }
  return rep;
}

UnionIndexReport union_index_check(const SurfaceClassData& c, const SurfaceClassData& d,
                                   const ReebDatum& datum, HalfInt geometric_intersection,
                                   HalfInt union_q_cross, HalfInt linking) {
  if (geometric_intersection != union_q_cross + linking)
    throw ValidationError("geometric intersection must equal union_q_cross + linking (got " +
                          geometric_intersection.str() + " vs " + (union_q_cross + linking).str() +
                          ")");
  SurfaceClassData u;
  u.pos_end = set_union(c.pos_end, d.pos_end);
  u.neg_end = set_union(c.neg_end, d.neg_end);
  u.genus = c.genus + d.genus;
  u.n_components = c.n_components + d.n_components;
  u.mu = c.mu + d.mu;
  u.q = c.q + d.q + 2 * union_q_cross;
  u.delta = c.delta + d.delta;
  u.epsilon = c.epsilon + d.epsilon;
  UnionIndexReport rep;
  rep.I_c = ech_index(c, datum);
  rep.I_d = ech_index(d, datum);
  rep.I_union = ech_index(u, datum);
  rep.slack = rep.I_union - rep.I_c - rep.I_d - 2 * geometric_intersection;
  rep.pass = rep.slack >= HalfInt();
  return rep;
}

HalfInt index_ambiguity(const HomologyDelta& delta) {
  QuarterInt v = QuarterInt::half_of(delta.maslov_class_pairing);
  v += QuarterInt(2 * delta.gamma_pairing);
  return v.to_half_int("index ambiguity");
}

TopologicalBoundReport topological_bound_check(const SurfaceClassData& s, const ReebDatum& datum,
                                               const TrivializationOffset& offsets) {
  s.validate(datum);
  auto vpos = is_ech_generator(s.pos_end, datum);
  if (!vpos.ok) throw ValidationError("positive end is not an ECH generator: " + vpos.reason);
  auto vneg = is_ech_generator(s.neg_end, datum);
  if (!vneg.ok) throw ValidationError("negative end is not an ECH generator: " + vneg.reason);
  OrbitChordSet pos_dec = decrement_multiplicities(s.pos_end);
  OrbitChordSet neg_dec = decrement_multiplicities(s.neg_end);
  TopologicalBoundReport rep;
  rep.lhs = -derive_euler_bar(s, datum);
  QuarterInt rhs(s.q);
  rhs -= QuarterInt::half_of(s.mu);
  rhs += QuarterInt(cz_ech_set(pos_dec, datum, offsets));
  rhs -= QuarterInt(cz_ech_set(neg_dec, datum, offsets));
  rep.rhs = rhs.to_half_int("topological bound");
  rep.slack = rep.rhs - rep.lhs;
  rep.pass = rep.slack >= HalfInt();
  return rep;
}

SurfaceClassData apply_trivialization_change(const SurfaceClassData& s, const ReebDatum& datum,
                                             const TrivializationOffset& offsets) {
  s.validate(datum);
  offsets.validate(datum);
  SurfaceClassData out = s;
  effective_mu_q(s, offsets, out.mu, out.q);
  for (auto& [name, braid] : out.pos_braids) {
    HalfInt d = offsets.of(name);
    if (!d.is_zero()) braid = twisted(braid, d);
  }
  for (auto& [name, braid] : out.neg_braids) {
    HalfInt d = offsets.of(name);
    if (!d.is_zero()) braid = twisted(braid, d);
  }
  return out;
}

Parity gluing_count_parity(const OrbitChordSet& middle, const ReebDatum& datum) {
  middle.validate(datum);
  for (const auto& [name, m] : middle.entries)
    if (datum.is_chord(name) && m != 1)
      throw ValidationError("gluing middle has multiply covered chord '" + name + "'");
  for (const auto& [name, m] : middle.entries) {
    if (!datum.is_orbit(name)) continue;
    if (datum.orbit(name).kind != OrbitKind::elliptic && m != 1) return Parity::even;
  }
  return Parity::odd;
}

SurfaceClassData SurfaceClassData::from_json(const nlohmann::json& j) {
  SurfaceClassData s;
  s.pos_end = OrbitChordSet::from_json(j.value("pos_end", nlohmann::json::object()));
  s.neg_end = OrbitChordSet::from_json(j.value("neg_end", nlohmann::json::object()));
  auto read_parts = [](const nlohmann::json& jp, std::map<std::string, std::vector<long long>>& out) {
    for (auto it = jp.begin(); it != jp.end(); ++it)
      out[it.key()] = it.value().get<std::vector<long long>>();
  };
  if (j.contains("pos_partitions")) read_parts(j.at("pos_partitions"), s.pos_partitions);
  if (j.contains("neg_partitions")) read_parts(j.at("neg_partitions"), s.neg_partitions);
  s.genus = j.value("genus", 0LL);
  s.n_components = j.value("n_components", 1LL);
  if (j.contains("mu")) s.mu = half_int_from_json(j.at("mu"));
  if (j.contains("q")) s.q = half_int_from_json(j.at("q"));
  s.delta = j.value("delta", 0LL);
  s.epsilon = j.value("epsilon", 0LL);
  if (j.contains("pos_braids"))
    for (auto it = j.at("pos_braids").begin(); it != j.at("pos_braids").end(); ++it)
      s.pos_braids[it.key()] = Braid::from_json(it.value());
  if (j.contains("neg_braids"))
    for (auto it = j.at("neg_braids").begin(); it != j.at("neg_braids").end(); ++it)
      s.neg_braids[it.key()] = Braid::from_json(it.value());
  return s;
}

nlohmann::json SurfaceClassData::to_json() const {
  nlohmann::json j;
  j["pos_end"] = pos_end.to_json();
  j["neg_end"] = neg_end.to_json();
  auto parts_json = [](const std::map<std::string, std::vector<long long>>& parts) {
    nlohmann::json jp = nlohmann::json::object();
    for (const auto& [name, list] : parts) jp[name] = list;
    return jp;
  };
  j["pos_partitions"] = parts_json(pos_partitions);
  j["neg_partitions"] = parts_json(neg_partitions);
  j["genus"] = genus;
  j["n_components"] = n_components;
  j["mu"] = half_int_to_json(mu);
  j["q"] = half_int_to_json(q);
  j["delta"] = delta;
  j["epsilon"] = epsilon;
  if (!pos_braids.empty()) {
    nlohmann::json jb = nlohmann::json::object();
    for (const auto& [name, braid] : pos_braids) jb[name] = braid.to_json();
    j["pos_braids"] = jb;
  }
  if (!neg_braids.empty()) {
    nlohmann::json jb = nlohmann::json::object();
    for (const auto& [name, braid] : neg_braids) jb[name] = braid.to_json();
    j["neg_braids"] = jb;
  }
  return j;
}

}  // namespace echkit
