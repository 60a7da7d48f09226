#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "echkit/braid.hpp"
#include "echkit/cz.hpp"
#include "echkit/partitions.hpp"
#include "echkit/reeb.hpp"

namespace echkit {

// Combinatorial stand-in for a relative surface class: ends with partitions,
// topology counts, Maslov number, relative self-intersection, singularity
// counts, optional asymptotic braids. mu and q are inputs in the reference
// trivialization; the artifact evaluates indices, it does not count curves.
struct SurfaceClassData {
  OrbitChordSet pos_end, neg_end;
  std::map<std::string, std::vector<long long>> pos_partitions, neg_partitions;
  long long genus = 0;
  long long n_components = 1;
  HalfInt mu, q;
  long long delta = 0, epsilon = 0;
  std::map<std::string, Braid> pos_braids, neg_braids;

  void validate(const ReebDatum& datum) const;
  bool has_partitions() const;

  static SurfaceClassData from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct HomologyDelta {
  HalfInt maslov_class_pairing;  // <mu(xi,Lambda), B-A>
  HalfInt gamma_pairing;         // Q(Gamma, B-A)
};

// chi(Sigma) - 1/2 chi(boundary arcs) from explicit topology counts;
// boundary_circle_punctures lists the chord punctures per boundary circle
// (0 entries are closed Lagrangian circles).
HalfInt euler_bar(long long genus, long long n_components, long long n_interior_punctures,
                  const std::vector<long long>& boundary_circle_punctures);

// chi-bar derived from SurfaceClassData: orbit strands are interior
// punctures, chord strands boundary punctures; all chord strands of the data
// are taken to lie on a single boundary circle (convention documented in the
// README). Requires partitions.
HalfInt derive_euler_bar(const SurfaceClassData& s, const ReebDatum& datum);

// Legendrian ECH index I = Q + mu/2 + CZ^ECH(pos) - CZ^ECH(neg). The offsets
// name the trivialization the stored mu/q are expressed in; the CZ terms are
// recomputed there. Composing with apply_trivialization_change leaves I
// unchanged (the trivialization table telescopes).
HalfInt ech_index(const SurfaceClassData& s, const ReebDatum& datum,
                  const TrivializationOffset& offsets = {});

// Fredholm index ind = -chi_bar + mu + CZ^ind(pos) - CZ^ind(neg), offsets as
// in ech_index.
HalfInt fredholm_index(const SurfaceClassData& s, const ReebDatum& datum,
                       const TrivializationOffset& offsets = {});

// Residual of the adjunction identity mu/2 = chi_bar + q + w - 2 delta - eps;
// zero on adjunction-consistent data.
HalfInt adjunction_residual(const SurfaceClassData& s, const ReebDatum& datum);

struct IndexInequalityReport {
  bool pass = false;
  HalfInt I, ind, slack;  // slack = I - ind - 2 delta - eps
  bool equality = false;
  std::optional<PartitionConditionsVerdict> partition_conditions;  // reported at equality
};

IndexInequalityReport index_inequality_check(const SurfaceClassData& s, const ReebDatum& datum,
                                             const TrivializationOffset& offsets = {});

struct UnionIndexReport {
  bool pass = false;
  HalfInt I_union, I_c, I_d, slack;
};

// I(c u d) >= I(c) + I(d) + 2 (C.D); the geometric intersection number must
// equal union_q_cross + linking (Lemma tying Q and linking together).
UnionIndexReport union_index_check(const SurfaceClassData& c, const SurfaceClassData& d,
                                   const ReebDatum& datum, HalfInt geometric_intersection,
                                   HalfInt union_q_cross, HalfInt linking);

// 1/2 <mu(xi,Lambda), B-A> + 2 Q(Gamma, B-A)
HalfInt index_ambiguity(const HomologyDelta& delta);

struct TopologicalBoundReport {
  bool pass = false;
  HalfInt lhs;    // -chi_bar
  HalfInt rhs;    // -mu/2 + Q + CZ^ECH(decremented pos) - CZ^ECH(decremented neg)
  HalfInt slack;  // rhs - lhs
};

// -chi_bar <= -mu/2 + Q + CZ^ECH(pos with every multiplicity reduced by one)
//             - CZ^ECH(neg likewise); ends must be ECH generators.
TopologicalBoundReport topological_bound_check(const SurfaceClassData& s, const ReebDatum& datum,
                                               const TrivializationOffset& offsets = {});

// Re-express the data in the offset trivialization: mu -= 2m*d and q -= m^2*d
// per positive-end element (signs flipped at negative ends), braids twisted
// by d. ech_index of the result equals ech_index of the input.
SurfaceClassData apply_trivialization_change(const SurfaceClassData& s, const ReebDatum& datum,
                                             const TrivializationOffset& offsets);

enum class Parity { odd, even };

// Parity of the gluing count over a middle orbit-chord set: odd iff every
// hyperbolic orbit has multiplicity one (elliptic and chord factors are odd;
// chords must appear with multiplicity one).
Parity gluing_count_parity(const OrbitChordSet& middle, const ReebDatum& datum);

}  // namespace echkit
