#include "echkit/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "echkit/cz.hpp"

namespace echkit {

Partition::Partition(std::initializer_list<long long> p) : Partition(std::vector<long long>(p)) {}

Partition::Partition(std::vector<long long> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  for (long long a : parts)
    if (a < 1) throw ValidationError("partition parts must be positive");
  if (parts.empty()) throw ValidationError("partition must be nonempty");
}

long long Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::vector<Partition> all_partitions(long long m) {
  std::vector<Partition> out;
  std::vector<long long> cur;
  std::function<void(long long, long long)> rec = [&](long long rest, long long maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long long a = std::min(rest, maxpart); a >= 1; --a) {
      cur.push_back(a);
      rec(rest - a, a);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

namespace {

void degeneracy_guard(const Rational& theta, long long m) {
  if (!(theta > Rational(0) && theta < Rational(1)))
    throw ValidationError("theta must lie in (0,1), got " + theta.str());
  if (m < 1) throw ValidationError("multiplicity must be >= 1");
  for (long long i = 1; i <= m; ++i)
    if ((Rational(i) * theta).is_integer())
      throw ValidationError("degenerate theta: " + std::to_string(i) + "*" + theta.str() +
                            " is an integer");
}

// Upper concave hull of the points (i, y[i]), i = 0..m. The positive
// partition reads off the corner displacements; the negative partition reads
// the displacements between consecutive lattice points on the path, so hull
// edges split at their interior lattice points.
Partition hull_displacements(const std::vector<long long>& y, bool split_at_lattice_points) {
  long long m = (long long)y.size() - 1;
  // monotone chain: keep turns that preserve concavity (right turns only)
  std::vector<long long> hull_x;
  for (long long i = 0; i <= m; ++i) {
    while (hull_x.size() >= 2) {
      long long x1 = hull_x[hull_x.size() - 2], x2 = hull_x.back();
      // cross of (x2-x1, y2-y1) and (i-x2, yi-y2); keep strictly concave corners
      __int128 cross = (__int128)(x2 - x1) * (y[i] - y[x2]) - (__int128)(i - x2) * (y[x2] - y[x1]);
      if (cross >= 0)
        hull_x.pop_back();  // x2 lies on or below the chord: not a corner
      else
        break;
    }
    hull_x.push_back(i);
  }
  std::vector<long long> parts;
  for (size_t i = 0; i + 1 < hull_x.size(); ++i) {
    long long run = hull_x[i + 1] - hull_x[i];
    if (split_at_lattice_points) {
      long long rise = y[hull_x[i + 1]] - y[hull_x[i]];
      long long g = std::gcd(run, rise < 0 ? -rise : rise);
      if (g == 0) g = run;
      for (long long k = 0; k < g; ++k) parts.push_back(run / g);
    } else {
      parts.push_back(run);
    }
  }
  return Partition(parts);
}

}  // namespace

Partition partition_positive(const Rational& theta, long long m) {
  degeneracy_guard(theta, m);
  std::vector<long long> y(m + 1);
  for (long long i = 0; i <= m; ++i) y[i] = (Rational(i) * theta).floor();
  return hull_displacements(y, false);
}

Partition partition_negative(const Rational& theta, long long m) {
  degeneracy_guard(theta, m);
  std::vector<long long> y(m + 1);
  for (long long i = 0; i <= m; ++i) y[i] = (Rational(i) * theta).ceil();
  return hull_displacements(y, true);
}

Partition partition_for_orbit(const OrbitDescriptor& orbit, long long m, EndSign sign) {
  if (m < 1) throw ValidationError("multiplicity must be >= 1");
  switch (orbit.kind) {
    case OrbitKind::pos_hyperbolic:
      return Partition(std::vector<long long>(m, 1));
    case OrbitKind::neg_hyperbolic: {
      std::vector<long long> parts(m / 2, 2);
      if (m % 2) parts.push_back(1);
      return Partition(parts);
    }
    case OrbitKind::elliptic:
      return sign == EndSign::positive ? partition_positive(orbit.theta, m)
                                       : partition_negative(orbit.theta, m);
  }
  throw ValidationError("unknown orbit kind");
}

long long cover_index(const OrbitDescriptor& orbit, const Partition& pos, const Partition& neg,
                      long long genus, long long n_components) {
  if (pos.total() != neg.total())
    throw ValidationError("cover end totals differ: " + pos.str() + " vs " + neg.str());
  if (genus < 0) throw ValidationError("genus must be >= 0");
  long long ends = (long long)pos.size() + (long long)neg.size();
  if (n_components < 1 || n_components > std::min<long long>(pos.size(), neg.size()))
    throw ValidationError("n_components must lie in [1, min(#pos, #neg)]");
  long long chi = 2 * n_components - 2 * genus - ends;
  long long ind = -chi;
  for (long long a : pos.parts) ind += cz_orbit_iterate(orbit, a);
  for (long long b : neg.parts) ind -= cz_orbit_iterate(orbit, b);
  return ind;
}

namespace {

// Search over assignments of pos/neg parts to components; every component is
// genus 0, gets nonempty sets of both with equal totals and index >= 0.
// Index of a genus-0 component: (#ends - 2) + sum CZ(pos) - sum CZ(neg).
struct LeqSearch {
  const std::vector<long long>* cz_pos;  // CZ(gamma^a) per pos part
  const std::vector<long long>* cz_neg;
  const std::vector<long long>* pos;
  const std::vector<long long>* neg;

  struct Comp {
    long long sum_pos = 0, sum_neg = 0;
    long long ends = 0;
    long long cz = 0;  // sum CZ(pos parts) - sum CZ(neg parts)
    bool has_pos = false, has_neg = false;
    long long index() const { return ends - 2 + cz; }
    friend bool operator==(const Comp& a, const Comp& b) {
      return a.sum_pos == b.sum_pos && a.sum_neg == b.sum_neg && a.ends == b.ends &&
             a.cz == b.cz && a.has_pos == b.has_pos && a.has_neg == b.has_neg;
    }
  };
  std::vector<Comp> comps;

  // components in identical states are interchangeable
  bool duplicate_state(size_t c) const {
    for (size_t c2 = 0; c2 < c; ++c2)
      if (comps[c2] == comps[c]) return true;
    return false;
  }

  bool feasible_total() const {
    long long total = 0;
    for (const auto& c : comps) {
      if (!c.has_pos || !c.has_neg || c.sum_pos != c.sum_neg) return false;
      long long ind = c.index();
      if (ind < 0) return false;
      total += ind;
    }
    return total == 0;
  }

  bool assign_neg(size_t j) {
    if (j == neg->size()) return feasible_total();
    for (size_t c = 0; c < comps.size(); ++c) {
      if (duplicate_state(c)) continue;
      auto saved = comps[c];
      comps[c].sum_neg += (*neg)[j];
      comps[c].ends += 1;
      comps[c].cz -= (*cz_neg)[j];
      comps[c].has_neg = true;
      if (comps[c].sum_neg <= comps[c].sum_pos && assign_neg(j + 1)) return true;
      comps[c] = saved;
    }
    return false;
  }

  bool assign_pos(size_t i, size_t used) {
    if (i == pos->size()) {
      if (used != comps.size()) return false;
      return assign_neg(0);
    }
    // restricted growth: component labels appear in order of first use
    size_t limit = std::min(used + 1, comps.size());
    for (size_t c = 0; c < limit; ++c) {
      if (duplicate_state(c)) continue;
      comps[c].sum_pos += (*pos)[i];
      comps[c].ends += 1;
      comps[c].cz += (*cz_pos)[i];
      comps[c].has_pos = true;
      if (assign_pos(i + 1, std::max(used, c + 1))) return true;
      comps[c].sum_pos -= (*pos)[i];
      comps[c].ends -= 1;
      comps[c].cz -= (*cz_pos)[i];
      if (comps[c].sum_pos == 0) comps[c].has_pos = false;
    }
    return false;
  }
};

}  // namespace

bool partition_leq(const OrbitDescriptor& orbit, const Partition& p, const Partition& q) {
  long long m = p.total();
  if (q.total() != m) throw ValidationError("partition_leq arguments must partition the same integer");
  if (m > kPartitionOrderBound)
    throw ValidationError("partition order search capped at m = " +
                          std::to_string(kPartitionOrderBound) + "; result unknown for m = " +
                          std::to_string(m));
  std::vector<long long> czp, czq;
  for (long long a : p.parts) czp.push_back(cz_orbit_iterate(orbit, a));
  for (long long b : q.parts) czq.push_back(cz_orbit_iterate(orbit, b));
  size_t cmax = std::min(p.size(), q.size());
  for (size_t ncomp = 1; ncomp <= cmax; ++ncomp) {
    LeqSearch s;
    s.cz_pos = &czp;
    s.cz_neg = &czq;
    s.pos = &p.parts;
    s.neg = &q.parts;
    s.comps.assign(ncomp, {});
    if (s.assign_pos(0, 0)) return true;
  }
  return false;
}

PartitionConditionsVerdict check_partition_conditions(const std::vector<EndSpec>& ends,
                                                      const ReebDatum& datum) {
  PartitionConditionsVerdict verdict;
  verdict.pass = true;
  for (const auto& end : ends) {
    EndConditionReport rep;
    rep.name = end.name;
    rep.sign = end.sign;
    rep.observed = Partition(end.multiplicities);
    long long m = rep.observed.total();
    if (datum.is_orbit(end.name)) {
      rep.expected = partition_for_orbit(datum.orbit(end.name), m, end.sign);
      rep.pass = rep.observed == rep.expected;
      if (!rep.pass) rep.note = "expected " + rep.expected.str();
    } else if (datum.is_chord(end.name)) {
      bool strands_simple = std::all_of(end.multiplicities.begin(), end.multiplicities.end(),
                                        [](long long a) { return a == 1; });
      rep.expected = Partition(std::vector<long long>(m, 1));
      if (!strands_simple) {
        rep.pass = false;
        rep.note = "chord strands must have multiplicity 1";
      } else if (end.sign == EndSign::negative && m != 1) {
        rep.pass = false;
        rep.note = "negative chord ends must have multiplicity 1";
      } else {
        rep.pass = true;
      }
    } else {
      throw ValidationError("unknown orbit or chord '" + end.name + "'");
    }
    verdict.pass = verdict.pass && rep.pass;
    verdict.ends.push_back(std::move(rep));
  }
  return verdict;
}

}  // namespace echkit
