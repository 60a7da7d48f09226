#include "echkit/asymptotic.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "echkit/angle.hpp"
#include "echkit/cz.hpp"

namespace echkit {

namespace {

constexpr double kClusterTol = 5e-4;
constexpr double kKernelTol = 1e-6 * kPi;

struct OdeSolution {
  std::vector<std::array<double, 2>> v;  // normalized nodal values
  double total_rotation = 0.0;
  double bc_mismatch = 0.0;  // |sin(angle(v(1)) - bc1)|
};

// RK4 for v' = J0 (S(t) + lambda) v from v(0) = u0, renormalized per step.
OdeSolution integrate(const MatrixFn& S, double lambda, const std::array<double, 2>& u0,
                      double bc1_angle, int N) {
  OdeSolution sol;
  sol.v.resize(N + 1);
  double h = 1.0 / N;
  std::array<double, 2> v = u0;
  sol.v[0] = v;
  auto f = [&](double t, const std::array<double, 2>& y, std::array<double, 2>& out) {
    std::array<double, 4> m = S(t);
    double w0 = (m[0] + lambda) * y[0] + m[1] * y[1];
    double w1 = m[2] * y[0] + (m[3] + lambda) * y[1];
    out[0] = -w1;  // J0 = [[0,-1],[1,0]]
    out[1] = w0;
  };
  std::array<double, 2> k1, k2, k3, k4, tmp;
  for (int j = 0; j < N; ++j) {
    double t = j * h;
    f(t, v, k1);
    tmp = {v[0] + 0.5 * h * k1[0], v[1] + 0.5 * h * k1[1]};
    f(t + 0.5 * h, tmp, k2);
    tmp = {v[0] + 0.5 * h * k2[0], v[1] + 0.5 * h * k2[1]};
    f(t + 0.5 * h, tmp, k3);
    tmp = {v[0] + h * k3[0], v[1] + h * k3[1]};
    f(t + h, tmp, k4);
    v[0] += h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
    v[1] += h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
    double n = std::hypot(v[0], v[1]);
    v[0] /= n;
    v[1] /= n;
    sol.v[j + 1] = v;
  }
  sol.total_rotation = pl_total_rotation(sol.v);
  double ang = std::atan2(v[1], v[0]);
  sol.bc_mismatch = std::fabs(std::sin(ang - bc1_angle));
  return sol;
}

}  // namespace

MatrixFn model_matrix(long long l) {
  double s = kPi / 2 * (double)(1 + 2 * l);
  return [s](double) { return std::array<double, 4>{s, 0.0, 0.0, s}; };
}

AsymptoticOperator discretize(MatrixFn S, double bc0, double bc1, int N) {
  if (N < kMinGrid)
    throw ValidationError("grid size " + std::to_string(N) + " below the floor " +
                          std::to_string(kMinGrid));
  if (!S) throw ValidationError("missing coefficient matrix function");
  AsymptoticOperator op;
  op.S = std::move(S);
  op.bc0 = bc0;
  op.bc1 = bc1;
  op.grid = N;
  op.ndof = 2 * N;
  op.u0 = {std::cos(bc0), std::sin(bc0)};
  op.u1 = {std::cos(bc1), std::sin(bc1)};
  int ldab = op.kd + 1;
  op.K.assign((size_t)ldab * op.ndof, 0.0);
  op.M.assign((size_t)ldab * op.ndof, 0.0);
  double h = 1.0 / N;

  // boundary lines eliminated by projection: node 0 carries one dof along u0,
  // node N one dof along u1
  auto dof = [&](int node, int comp, int& idx, double& w) {
    if (node == 0) {
      idx = 0;
      w = op.u0[comp];
    } else if (node == N) {
      idx = 2 * N - 1;
      w = op.u1[comp];
    } else {
      idx = 2 * node - 1 + comp;
      w = 1.0;
    }
  };
  // lower-band storage holds one value per unordered index pair, so the
  // assembled matrix is symmetric by construction
  auto add = [&](std::vector<double>& ab, int ni, int ci, int nj, int cj, double v) {
    int a, b;
    double wa, wb;
    dof(ni, ci, a, wa);
    dof(nj, cj, b, wb);
    if (a < b) return;
    ab[(size_t)(a - b) + (size_t)b * ldab] += v * wa * wb;
  };
  auto add_rot = [&](int ni, int nj, double t) {
    add(op.K, ni, 0, nj, 1, t);   // block t * (-J0)
    add(op.K, ni, 1, nj, 0, -t);
  };
  add_rot(0, 0, -0.5);
  add_rot(N, N, 0.5);
  for (int j = 0; j < N; ++j) {
    add_rot(j, j + 1, 0.5);
    add_rot(j + 1, j, -0.5);
  }
  for (int e = 0; e < N; ++e) {
    std::array<double, 4> Se = op.S((e + 0.5) * h);
    double scale = std::max({std::fabs(Se[0]), std::fabs(Se[1]), std::fabs(Se[2]), std::fabs(Se[3]), 1.0});
    if (std::fabs(Se[1] - Se[2]) > 1e-9 * scale)
      throw ValidationError("coefficient matrix is not symmetric at t = " + std::to_string((e + 0.5) * h));
    double w[2][2] = {{2 * h / 6, h / 6}, {h / 6, 2 * h / 6}};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        int na = e + a, nb = e + b;
        add(op.K, na, 0, nb, 0, -w[a][b] * Se[0]);
        add(op.K, na, 0, nb, 1, -w[a][b] * Se[1]);
        add(op.K, na, 1, nb, 0, -w[a][b] * Se[2]);
        add(op.K, na, 1, nb, 1, -w[a][b] * Se[3]);
        add(op.M, na, 0, nb, 0, w[a][b]);
        add(op.M, na, 1, nb, 1, w[a][b]);
      }
  }
  return op;
}

namespace {

std::vector<double> pencil_eigenvalues(const AsymptoticOperator& op, double lo, double hi) {
  int n = op.ndof, kd = op.kd, ldab = kd + 1;
  std::vector<double> Kc(op.K), Mc(op.M), w(n), qdummy(1), zdummy(1);
  std::vector<int> ifail(n);
  int found = 0;
  int info = LAPACKE_dsbgvx(LAPACK_COL_MAJOR, 'N', 'V', 'L', n, kd, kd, Kc.data(), ldab,
                            Mc.data(), ldab, qdummy.data(), 1, lo, hi, 0, 0,
                            2 * LAPACKE_dlamch('S'), &found, w.data(), zdummy.data(), 1,
                            ifail.data());
  if (info != 0)
    throw NumericError("banded eigensolver failed with info = " + std::to_string(info));
  w.resize(found);
  std::sort(w.begin(), w.end());
  return w;
}

// continuous endpoint angle is strictly increasing in lambda; bisect to the
// coset target
double refine_eigenvalue(const AsymptoticOperator& op, double lambda0, double target,
                         double radius) {
  auto rot = [&](double lam) {
    return integrate(op.S, lam, op.u0, op.bc1, op.grid).total_rotation;
  };
  double a = lambda0 - radius, b = lambda0 + radius;
  double fa = rot(a) - target, fb = rot(b) - target;
  for (int widen = 0; widen < 8 && fa * fb > 0; ++widen) {
    radius *= 4;
    a = lambda0 - radius;
    b = lambda0 + radius;
    fa = rot(a) - target;
    fb = rot(b) - target;
  }
  if (fa * fb > 0)
    throw NumericError("eigenvalue refinement failed to bracket the boundary angle (residual " +
                       std::to_string(std::min(std::fabs(fa), std::fabs(fb))) + ")");
  for (int it = 0; it < 200 && b - a > 1e-13 * (1 + std::fabs(lambda0)); ++it) {
    double mid = 0.5 * (a + b);
    double fm = rot(mid) - target;
    if (fm == 0) return mid;
    if (fa * fm < 0) {
      b = mid;
      fb = fm;
    } else {
      a = mid;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

double coset_offset(const AsymptoticOperator& op) { return op.bc1 - op.bc0; }

}  // namespace

std::vector<EigenPair> spectrum_window(const AsymptoticOperator& op, double lo, double hi) {
  if (!(lo < hi)) throw ValidationError("spectrum window requires lo < hi");
  if (op.ndof == 0) throw ValidationError("operator has not been discretized");
  std::vector<double> raw = pencil_eigenvalues(op, lo, hi);
  double delta0 = coset_offset(op);
  std::vector<EigenPair> out;
  std::vector<long long> seen_halfturns;
  size_t i = 0;
  while (i < raw.size()) {
    // cluster nearly coincident pencil eigenvalues
    size_t j = i + 1;
    while (j < raw.size() && raw[j] - raw[j - 1] <= kClusterTol * (1 + std::fabs(raw[j]))) ++j;
    // best representative by boundary mismatch of the fundamental solution
    double best = raw[i];
    double best_mis = std::numeric_limits<double>::infinity();
    for (size_t k = i; k < j; ++k) {
      OdeSolution s = integrate(op.S, raw[k], op.u0, op.bc1, op.grid);
      if (s.bc_mismatch < best_mis) {
        best_mis = s.bc_mismatch;
        best = raw[k];
      }
    }
    i = j;
    if (best_mis > 1e-3) continue;  // spurious grid branch: no nearby ODE eigenvalue
    OdeSolution s0 = integrate(op.S, best, op.u0, op.bc1, op.grid);
    double target = delta0 + kPi * std::nearbyint((s0.total_rotation - delta0) / kPi);
    double lambda = refine_eigenvalue(op, best, target, kClusterTol * (1 + std::fabs(best)));
    if (lambda < lo || lambda > hi) continue;
    OdeSolution s = integrate(op.S, lambda, op.u0, op.bc1, op.grid);
    if (s.bc_mismatch > 1e-6)
      throw NumericError("eigenfunction residual " + std::to_string(s.bc_mismatch) +
                         " at lambda = " + std::to_string(lambda));
    long long halfturns = half_turns_in_coset(s.total_rotation, delta0, 0.25);
    if (std::find(seen_halfturns.begin(), seen_halfturns.end(), halfturns) != seen_halfturns.end())
      continue;  // same eigenvalue reached from two pencil candidates
    seen_halfturns.push_back(halfturns);
    EigenPair pair;
    pair.lambda = lambda;
    pair.vector = std::move(s.v);
    pair.winding = HalfInt(halfturns);
    out.push_back(std::move(pair));
  }
  std::sort(out.begin(), out.end(),
            [](const EigenPair& a, const EigenPair& b) { return a.lambda < b.lambda; });
  return out;
}

HalfInt eigen_winding(const EigenPair& pair, const AsymptoticOperator& op) {
  if (pair.vector.size() < 2) throw ValidationError("eigenvector has too few samples");
  double scale = 0.0;
  for (const auto& v : pair.vector) scale = std::max(scale, std::hypot(v[0], v[1]));
  for (const auto& v : pair.vector)
    if (std::hypot(v[0], v[1]) < 1e-9 * scale)
      throw NumericError("eigenvector has a near-zero sample; refine the resolution");
  double rot = pl_total_rotation(pair.vector);
  return HalfInt(half_turns_in_coset(rot, coset_offset(op), 0.25));
}

HalfInt cz_from_spectrum(const AsymptoticOperator& op) {
  for (double w = 2 * kPi; w <= 64 * kPi; w *= 2) {
    std::vector<EigenPair> spec = spectrum_window(op, -w, w);
    const EigenPair* neg = nullptr;
    const EigenPair* pos = nullptr;
    for (const auto& p : spec) {
      if (std::fabs(p.lambda) < kKernelTol)
        throw ValidationError("operator is degenerate: eigenvalue " + std::to_string(p.lambda) +
                              " within the kernel tolerance");
      if (p.lambda < 0 && (!neg || p.lambda > neg->lambda)) neg = &p;
      if (p.lambda > 0 && (!pos || p.lambda < pos->lambda)) pos = &p;
    }
    if (neg && pos) return pos->winding + neg->winding;
  }
  throw NumericError("no eigenvalues of both signs within the search window");
}

HalfInt cz_via_path(const MatrixFn& S, int initial_grid) {
  if (!S) throw ValidationError("missing coefficient matrix function");
  int N = std::max(initial_grid, 64);
  HalfInt prev;
  bool have_prev = false;
  for (int round = 0; round < 8; ++round, N *= 2) {
    OdeSolution sol = integrate(S, 0.0, {1.0, 0.0}, 0.0, N);
    LagrangianPath path;
    path.samples.reserve(sol.v.size());
    double angle = std::atan2(sol.v[0][1], sol.v[0][0]);
    path.samples.emplace_back(0.0, angle);
    for (size_t k = 1; k < sol.v.size(); ++k) {
      const auto& a = sol.v[k - 1];
      const auto& b = sol.v[k];
      angle += std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
      path.samples.emplace_back((double)k / (sol.v.size() - 1), angle);
    }
    HalfInt cz = cz_lagrangian_path(path);  // throws on a degenerate endpoint
    if (have_prev && cz == prev) return cz;
    prev = cz;
    have_prev = true;
  }
  throw NumericError("path winding failed to stabilize under step refinement");
}

}  // namespace echkit
