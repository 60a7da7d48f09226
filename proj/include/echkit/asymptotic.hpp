#pragma once

#include <array>
#include <functional>
#include <vector>

#include "echkit/half_int.hpp"

namespace echkit {

// Symmetric 2x2 coefficient S(t) of the operator A = -J0 d/dt - S(t),
// row-major {a, b, c, d} with b == c.
using MatrixFn = std::function<std::array<double, 4>(double)>;

// Model coefficient (pi/2)(1+2l) * Id whose spectrum is the odd multiples of
// pi/2.
MatrixFn model_matrix(long long l);

inline constexpr int kMinGrid = 64;

// Self-adjoint finite-dimensional realization of A with Lagrangian boundary
// lines at angles bc0, bc1: banded symmetric stiffness/mass pencil on the
// N+1 node grid (weak form with midpoint-sampled S; boundary lines are
// eliminated by projection, which keeps the corner blocks symmetric).
struct AsymptoticOperator {
  MatrixFn S;
  double bc0 = 0.0, bc1 = 0.0;
  int grid = 0;       // N intervals
  int ndof = 0;       // 2N after boundary projection
  int kd = 3;         // scalar bandwidth
  std::vector<double> K, M;  // lower band, column-major, ld = kd+1
  std::array<double, 2> u0{1, 0}, u1{1, 0};
};

AsymptoticOperator discretize(MatrixFn S, double bc0, double bc1, int N);

struct EigenPair {
  double lambda = 0.0;
  std::vector<std::array<double, 2>> vector;  // nodal values, nowhere zero
  HalfInt winding;
};

// All eigenpairs with lambda in [lo, hi], sorted. Eigenvalues come from the
// banded symmetric-definite pencil; each candidate is classified against the
// integrated fundamental solution (spurious grid modes of the consistent-mass
// pencil fail the boundary condition) and refined on the monotone endpoint
// angle. Eigenfunctions are realized from the fundamental solution.
std::vector<EigenPair> spectrum_window(const AsymptoticOperator& op, double lo, double hi);

// Half-turn count of the discretized eigenvector relative to the boundary
// coset, as an exact half-integer.
HalfInt eigen_winding(const EigenPair& pair, const AsymptoticOperator& op);

// min positive-eigenvalue winding plus max negative-eigenvalue winding.
HalfInt cz_from_spectrum(const AsymptoticOperator& op);

// CZ of the Lagrangian path of the fundamental solution of -J0 v' - S v = 0,
// computed through the cz module with step refinement.
HalfInt cz_via_path(const MatrixFn& S, int initial_grid = 512);

}  // namespace echkit
