#include "echkit/braid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "echkit/angle.hpp"

namespace echkit {

namespace {

constexpr double kSnapTol = 1e-7;

double braid_scale(const Braid& b) {
  double s = 0.0;
  for (const auto& st : b.strands)
    for (const auto& p : st.samples) s = std::max({s, std::fabs(p[1]), std::fabs(p[2])});
  return s > 0 ? s : 1.0;
}

// One unit-interval piece of a strand diagram: a graph t |-> (x, y), t in [0,1].
struct Pass {
  int strand = 0;
  int index = 0;  // global pass index, used for the deterministic shear
  std::vector<std::array<double, 3>> pts;

  std::array<double, 2> eval(double t) const {
    // pts sorted by t over exactly [0,1]
    auto it = std::lower_bound(pts.begin(), pts.end(), t,
                               [](const std::array<double, 3>& p, double v) { return p[0] < v; });
    if (it == pts.begin()) return {pts.front()[1], pts.front()[2]};
    if (it == pts.end()) return {pts.back()[1], pts.back()[2]};
    const auto& b = *it;
    const auto& a = *(it - 1);
    double den = b[0] - a[0];
    double u = den > 0 ? (t - a[0]) / den : 0.0;
    return {a[1] + u * (b[1] - a[1]), a[2] + u * (b[2] - a[2])};
  }
};

std::array<double, 2> strand_eval(const BraidStrand& st, double t) {
  auto it = std::lower_bound(st.samples.begin(), st.samples.end(), t,
                             [](const std::array<double, 3>& p, double v) { return p[0] < v; });
  if (it == st.samples.begin()) return {st.samples.front()[1], st.samples.front()[2]};
  if (it == st.samples.end()) return {st.samples.back()[1], st.samples.back()[2]};
  const auto& b = *it;
  const auto& a = *(it - 1);
  double den = b[0] - a[0];
  double u = den > 0 ? (t - a[0]) / den : 0.0;
  return {a[1] + u * (b[1] - a[1]), a[2] + u * (b[2] - a[2])};
}

// Split the strands of one or two braids into unit passes. Circle strands of
// w wraps contribute w passes; the seam may be rotated by `shift` first.
std::vector<Pass> make_passes(const std::vector<const Braid*>& braids, double shift,
                              std::vector<int>* braid_of_pass = nullptr) {
  std::vector<Pass> passes;
  int gidx = 0;
  for (size_t bi = 0; bi < braids.size(); ++bi) {
    const Braid& b = *braids[bi];
    for (size_t si = 0; si < b.strands.size(); ++si) {
      const BraidStrand& st = b.strands[si];
      if (b.base == BraidBase::interval) {
        Pass p;
        p.strand = (int)si;
        p.index = gidx++;
        p.pts = st.samples;
        passes.push_back(std::move(p));
        if (braid_of_pass) braid_of_pass->push_back((int)bi);
        continue;
      }
      double w = (double)st.wraps;
      // breakpoints of the shifted strand: original sample times minus shift,
      // folded into [0, w], plus all integer cut points
      std::set<double> times;
      for (const auto& s : st.samples) {
        double t = std::fmod(s[0] - shift, w);
        if (t < 0) t += w;
        times.insert(t);
      }
      for (long long k = 0; k <= st.wraps; ++k) times.insert((double)k);
      std::vector<double> tv(times.begin(), times.end());
      for (long long k = 0; k < st.wraps; ++k) {
        Pass p;
        p.strand = (int)si;
        p.index = gidx++;
        for (double t : tv) {
          if (t < (double)k - 1e-15 || t > (double)(k + 1) + 1e-15) continue;
          double tt = std::min(std::max(t, (double)k), (double)(k + 1));
          double src = std::fmod(tt + shift, w);
          if (src < 0) src += w;
          // exact wrap endpoint: evaluate at the seam consistently
          auto xy = strand_eval(st, src);
          p.pts.push_back({tt - (double)k, xy[0], xy[1]});
        }
        // dedupe nearly-equal parameter values
        p.pts.erase(std::unique(p.pts.begin(), p.pts.end(),
                                [](const auto& a, const auto& b) { return std::fabs(a[0] - b[0]) < 1e-14; }),
                    p.pts.end());
        passes.push_back(std::move(p));
        if (braid_of_pass) braid_of_pass->push_back((int)bi);
      }
    }
  }
  return passes;
}

struct CrossingCount {
  long long signed_count = 0;
  bool seam_zero = false;  // projection coincidence at the circle seam
};

// Signed crossings between two passes. The projection is made generic by the
// exact limit of the lexicographic shear: breakpoints with dx == 0 resolve
// toward sgn(index difference). The resolution depends only on the pair, so
// a pair counts identically in every diagram containing it; that exactness is
// what keeps the writhe/linking union identity on the nose.
CrossingCount count_pair(const Pass& a, const Pass& b, double scale) {
  CrossingCount out;
  std::set<double> grid;
  for (const auto& p : a.pts) grid.insert(p[0]);
  for (const auto& p : b.pts) grid.insert(p[0]);
  std::vector<double> tv(grid.begin(), grid.end());
  size_t n = tv.size();
  std::vector<double> dx(n), dy(n);
  std::vector<int> sig(n);
  int zeta = a.index > b.index ? +1 : -1;
  for (size_t i = 0; i < n; ++i) {
    auto pa = a.eval(tv[i]);
    auto pb = b.eval(tv[i]);
    dx[i] = pa[0] - pb[0];
    dy[i] = pa[1] - pb[1];
    if (dx[i] == 0.0) {
      if (std::fabs(dy[i]) < 1e-12 * scale)
        throw ValidationError("braid strands are not pairwise disjoint");
      if (i == 0 || i + 1 == n) out.seam_zero = true;
      sig[i] = zeta;
    } else {
      sig[i] = dx[i] > 0 ? +1 : -1;
    }
  }
  for (size_t i = 0; i + 1 < n; ++i) {
    if (sig[i] == sig[i + 1]) continue;
    double ystar;
    if (dx[i] == 0.0) {
      ystar = dy[i];
    } else if (dx[i + 1] == 0.0) {
      ystar = dy[i + 1];
    } else {
      double u = dx[i] / (dx[i] - dx[i + 1]);
      ystar = dy[i] + u * (dy[i + 1] - dy[i]);
    }
    if (std::fabs(ystar) < 1e-12 * scale)
      throw ValidationError("braid strands are not pairwise disjoint");
    int slope = sig[i + 1] > sig[i] ? +1 : -1;
    // anticlockwise relative rotation counts +1
    int sign = (ystar > 0) ? (slope < 0 ? +1 : -1) : (slope < 0 ? -1 : +1);
    out.signed_count += sign;
  }
  return out;
}

struct DiagramCount {
  long long self_b1 = 0;  // pass pairs within braid 1
  long long self_b2 = 0;  // within braid 2 (when present)
  long long cross = 0;    // between the braids
  bool seam_zero = false;
};

DiagramCount count_diagram(const std::vector<Pass>& passes, const std::vector<int>& braid_of,
                           double scale) {
  DiagramCount out;
  for (size_t i = 0; i < passes.size(); ++i) {
    for (size_t j = i + 1; j < passes.size(); ++j) {
      CrossingCount c = count_pair(passes[i], passes[j], scale);
      if (c.seam_zero) out.seam_zero = true;
      if (braid_of[i] != braid_of[j])
        out.cross += c.signed_count;
      else if (braid_of[i] == 0)
        out.self_b1 += c.signed_count;
      else
        out.self_b2 += c.signed_count;
    }
  }
  return out;
}

// A projection coincidence exactly at the circle seam is the one event the
// per-pair resolution cannot localize consistently; rotating the cut point
// (a re-parametrization, so the diagram and its counts are unchanged) moves
// the seam off the coincidence.
DiagramCount robust_count(const std::vector<const Braid*>& braids) {
  const double shifts[] = {0.0, 0.0137482, 0.0279443, 0.0413077, 0.0561203, 0.0703919};
  double scale = 0.0;
  for (const Braid* b : braids) scale = std::max(scale, braid_scale(*b));
  bool circular = braids[0]->base == BraidBase::circle;
  for (double shift : shifts) {
    std::vector<int> braid_of;
    std::vector<Pass> passes = make_passes(braids, shift, &braid_of);
    DiagramCount c = count_diagram(passes, braid_of, scale);
    if (!c.seam_zero || !circular) return c;
  }
  throw NumericError("braid projection stayed non-generic at the seam after the rotation budget");
}

}  // namespace

long long Braid::total_multiplicity() const {
  long long m = 0;
  for (const auto& s : strands) m += (base == BraidBase::circle) ? s.wraps : 1;
  return m;
}

void Braid::validate() const {
  double scale = braid_scale(*this);
  for (const auto& s : strands) {
    if (s.samples.size() < 2) throw ValidationError("braid strand needs at least two samples");
    for (size_t i = 0; i + 1 < s.samples.size(); ++i)
      if (!(s.samples[i][0] < s.samples[i + 1][0]))
        throw ValidationError("braid strand parameters must be strictly increasing");
    double tmax = (base == BraidBase::circle) ? (double)s.wraps : 1.0;
    if (std::fabs(s.samples.front()[0]) > 1e-9 || std::fabs(s.samples.back()[0] - tmax) > 1e-9)
      throw ValidationError("braid strand parameter must run over [0," + std::to_string((long long)tmax) + "]");
    if (base == BraidBase::circle) {
      if (s.wraps < 1) throw ValidationError("circle strand needs wraps >= 1");
      double dx = s.samples.front()[1] - s.samples.back()[1];
      double dy = s.samples.front()[2] - s.samples.back()[2];
      if (std::hypot(dx, dy) > kSnapTol * scale)
        throw ValidationError("circle strand does not close up after its wraps");
    } else {
      if (s.wraps != 1) throw ValidationError("interval strands have no wraps");
      if (std::fabs(s.samples.front()[2]) > kSnapTol * scale ||
          std::fabs(s.samples.back()[2]) > kSnapTol * scale)
        throw ValidationError("interval strand endpoints must lie on the x-axis");
    }
  }
}

HalfInt writhe(const Braid& b) {
  b.validate();
  if (b.strands.empty()) return HalfInt();
  DiagramCount c = robust_count({&b});
  return HalfInt::whole(c.self_b1);
}

HalfInt linking(const Braid& b1, const Braid& b2) {
  b1.validate();
  b2.validate();
  if (b1.base != b2.base) throw ValidationError("linking requires braids over the same base");
  if (b1.strands.empty() || b2.strands.empty()) return HalfInt();
  DiagramCount c = robust_count({&b1, &b2});
  return HalfInt(c.cross);  // half of the signed crossing count
}

HalfInt winding(const BraidStrand& strand) {
  std::vector<std::array<double, 2>> pts;
  pts.reserve(strand.samples.size());
  for (const auto& s : strand.samples) pts.push_back({s[1], s[2]});
  double total;
  try {
    total = pl_total_rotation(pts);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("strand winding: ") + e.what());
  }
  long long halves;
  if (!snap_to_integer(total / kPi, 1e-6, halves))
    throw NumericError("strand rotation is not a half-turn multiple; refine the sampling");
  return HalfInt(halves);
}

std::vector<HalfInt> windings(const Braid& b) {
  std::vector<HalfInt> out;
  for (const auto& s : b.strands) out.push_back(winding(s));
  return out;
}

HalfInt writhe_transform_delta(long long m, HalfInt d) {
  if (m < 1) throw ValidationError("strand count must be >= 1");
  return m * (m - 1) * d;
}

Braid twisted(const Braid& b, HalfInt d) {
  b.validate();
  if (b.base == BraidBase::circle && !d.is_integer())
    throw ValidationError("circle braids twist by integer offsets only");
  double dv = d.twice() / 2.0;
  Braid out = b;
  for (auto& st : out.strands) {
    // refine so each segment turns by less than pi/8 under the twist
    std::vector<std::array<double, 3>> refined;
    for (size_t i = 0; i + 1 < st.samples.size(); ++i) {
      double t0 = st.samples[i][0], t1 = st.samples[i + 1][0];
      int extra = (int)std::ceil(std::fabs(2 * kPi * dv * (t1 - t0)) / (kPi / 8));
      refined.push_back(st.samples[i]);
      for (int k = 1; k <= extra; ++k) {
        double t = t0 + (t1 - t0) * k / (extra + 1);
        auto xy = strand_eval(st, t);
        refined.push_back({t, xy[0], xy[1]});
      }
    }
    refined.push_back(st.samples.back());
    for (auto& p : refined) {
      double ang = 2 * kPi * dv * p[0];
      double c = std::cos(ang), s = std::sin(ang);
      double x = p[1] * c - p[2] * s, y = p[1] * s + p[2] * c;
      p[1] = x;
      p[2] = y;
    }
    st.samples = std::move(refined);
  }
  // interval endpoints stay on the axis up to roundoff; snap them back
  if (out.base == BraidBase::interval)
    for (auto& st : out.strands) {
      st.samples.front()[2] = 0.0;
      st.samples.back()[2] = 0.0;
    }
  return out;
}

Braid braid_from_modes(const std::vector<std::vector<EigenMode>>& per_strand_modes, double s0,
                       int n_samples, BraidBase base) {
  if (per_strand_modes.empty()) throw ValidationError("braid_from_modes: no strands");
  if (n_samples < 2) throw ValidationError("braid_from_modes: need at least two samples");
  Braid b;
  b.base = base;
  for (const auto& modes : per_strand_modes) {
    if (modes.empty()) throw ValidationError("braid_from_modes: strand with empty mode list");
    BraidStrand st;
    st.wraps = 1;
    for (int k = 0; k < n_samples; ++k) {
      double t = (double)k / (n_samples - 1);
      double x = 0, y = 0;
      for (const auto& mode : modes) {
        if (mode.samples.size() < 2) throw ValidationError("braid_from_modes: mode needs samples");
        double pos = t * (mode.samples.size() - 1);
        size_t i0 = std::min((size_t)pos, mode.samples.size() - 2);
        double u = pos - (double)i0;
        double ex = mode.samples[i0][0] + u * (mode.samples[i0 + 1][0] - mode.samples[i0][0]);
        double ey = mode.samples[i0][1] + u * (mode.samples[i0 + 1][1] - mode.samples[i0][1]);
        double amp = std::exp(mode.lambda * s0);
        x += amp * ex;
        y += amp * ey;
      }
      st.samples.push_back({t, x, y});
    }
    b.strands.push_back(std::move(st));
  }
  double scale = braid_scale(b);
  if (base == BraidBase::interval)
    for (auto& st : b.strands) {
      if (std::fabs(st.samples.front()[2]) > kSnapTol * scale ||
          std::fabs(st.samples.back()[2]) > kSnapTol * scale)
        throw ValidationError("braid_from_modes: mode endpoints are off the x-axis");
      st.samples.front()[2] = 0.0;
      st.samples.back()[2] = 0.0;
    }
  // strands must be separated at this slice
  for (size_t i = 0; i < b.strands.size(); ++i)
    for (size_t j = i + 1; j < b.strands.size(); ++j)
      for (int k = 0; k < n_samples; ++k) {
        double dx = b.strands[i].samples[k][1] - b.strands[j].samples[k][1];
        double dy = b.strands[i].samples[k][2] - b.strands[j].samples[k][2];
        if (std::hypot(dx, dy) < 1e-9 * scale)
          throw NumericError("braid_from_modes: strand collision at this resolution; increase s0");
      }
  return b;
}

WritheBoundReport writhe_bound_check(const Braid& b, int sign) {
  if (sign != +1 && sign != -1) throw ValidationError("sign must be +1 or -1");
  if (b.base != BraidBase::interval)
    throw ValidationError("writhe_bound_check applies to chord-end (interval) braids");
  WritheBoundReport rep;
  rep.writhe = writhe(b);
  rep.strand_windings = windings(b);
  rep.pass = true;
  for (size_t i = 0; i < rep.strand_windings.size(); ++i) {
    long long tw = rep.strand_windings[i].twice();
    if ((sign > 0 && tw > 0) || (sign < 0 && tw < 0)) {
      rep.pass = false;
      rep.winding_violations.push_back({(long long)i, tw});
    }
  }
  for (size_t i = 0; i < b.strands.size(); ++i)
    for (size_t j = i + 1; j < b.strands.size(); ++j) {
      Braid bi, bj;
      bi.base = bj.base = BraidBase::interval;
      bi.strands.push_back(b.strands[i]);
      bj.strands.push_back(b.strands[j]);
      HalfInt l = linking(bi, bj);
      if ((sign > 0 && l.twice() > 0) || (sign < 0 && l.twice() < 0)) {
        rep.pass = false;
        rep.linking_violations.push_back({(long long)i, (long long)j, l.twice()});
      }
    }
  long long wt = rep.writhe.twice();
  if ((sign > 0 && wt > 0) || (sign < 0 && wt < 0)) rep.pass = false;
  rep.slack = sign > 0 ? -rep.writhe : rep.writhe;
  rep.equality = rep.pass && rep.writhe.is_zero();
  return rep;
}

Braid Braid::from_json(const nlohmann::json& j) {
  Braid b;
  std::string base = j.at("base").get<std::string>();
  if (base == "circle")
    b.base = BraidBase::circle;
  else if (base == "interval")
    b.base = BraidBase::interval;
  else
    throw ValidationError("braid base must be \"circle\" or \"interval\"");
  for (const auto& js : j.at("strands")) {
    BraidStrand st;
    st.wraps = js.value("wraps", 1LL);
    for (const auto& jp : js.at("samples")) {
      if (!jp.is_array() || jp.size() != 3) throw ValidationError("braid sample must be [t,x,y]");
      st.samples.push_back({jp[0].get<double>(), jp[1].get<double>(), jp[2].get<double>()});
    }
    b.strands.push_back(std::move(st));
  }
  b.validate();
  return b;
}

nlohmann::json Braid::to_json() const {
  nlohmann::json j;
  j["base"] = base == BraidBase::circle ? "circle" : "interval";
  j["strands"] = nlohmann::json::array();
  for (const auto& st : strands) {
    nlohmann::json js;
    js["wraps"] = st.wraps;
    js["samples"] = nlohmann::json::array();
    for (const auto& p : st.samples) js["samples"].push_back({p[0], p[1], p[2]});
    j["strands"].push_back(js);
  }
  return j;
}

}  // namespace echkit
