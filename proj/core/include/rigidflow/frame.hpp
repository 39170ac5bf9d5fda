#pragma once

#include <cstddef>
#include <vector>

#include "rigidflow/geometry.hpp"
#include "rigidflow/jet.hpp"
#include "rigidflow/linalg.hpp"
#include "rigidflow/scene.hpp"

namespace rigidflow {

// Gram-Schmidt skip stability thresholds. A candidate whose squared residual
// norm sits between the skip band and the accept floor, or whose residual is
// small in value but not flat to second order, makes the skip set depend on
// the sample point; that raises SkipSetUnstable instead of guessing.
inline constexpr double kEpsSkipGradient = 1e-8;
inline constexpr double kEpsSkipHessian = 1e-6;
inline constexpr double kEpsAcceptNorm = 1e-6;

// Orthonormal frame adapted to the flow at one sample point, with enough
// derivative data to evaluate every downstream identity:
//   I[mu][alpha]    frame vectors, I_0 = V/lambda, I_i spacelike
//   omega[mu][alpha] dual coframe
//   gh[mu][nu][rho]  frame connection coefficients, omega^mu(nabla_{I_rho} I_nu)
// plus first coordinate derivatives of each. Index 0 is the timelike slot;
// eta holds the frame signature (-1, +1, ..., +1).
struct FrameSample {
  std::size_t n = 0;
  std::vector<double> point;
  MetricSample metric;
  ConnectionSample conn;

  double lambda = 0.0;
  std::vector<double> lambda_grad; // n

  std::vector<double> I;      // n*n       [mu][alpha]
  std::vector<double> dI;     // n*n*n     [beta][mu][alpha]
  std::vector<double> omega;  // n*n       [mu][alpha]
  std::vector<double> domega; // n*n*n     [beta][mu][alpha]
  std::vector<double> gh;     // n*n*n     [mu][nu][rho]
  std::vector<double> dgh;    // n*n*n*n   [alpha][mu][nu][rho]
  std::vector<double> eta;    // n

  std::vector<std::size_t> skipped; // coordinate candidates dropped by Gram-Schmidt

  double ghat(std::size_t mu, std::size_t nu, std::size_t rho) const {
    return gh[ix3(n, mu, nu, rho)];
  }
  double dghat(std::size_t a, std::size_t mu, std::size_t nu, std::size_t rho) const {
    return dgh[ix4(n, a, mu, nu, rho)];
  }

  // acceleration, rotation/strain, spatial connection, and time-transport
  // slices of the frame connection (spatial indices 1..n-1)
  double K(std::size_t i) const { return ghat(i, 0, 0); }
  double M(std::size_t i, std::size_t j) const { return ghat(i, 0, j); }
  double A(std::size_t i, std::size_t j, std::size_t k) const { return ghat(i, j, k); }
  double B(std::size_t i, std::size_t j) const { return ghat(i, j, 0); }

  // directional derivative along I_mu of a scalar with coordinate gradient df
  double dir(std::size_t mu, const double* df) const {
    double s = 0.0;
    for (std::size_t a = 0; a < n; ++a) s += I[ix2(n, mu, a)] * df[a];
    return s;
  }
};

// Flow-adapted covariant derivatives of K and M. The spatial covariant
// derivative uses the A-connection; the dot is transport along I_0 corrected
// by B - M so that it measures genuine evolution in the co-moving frame.
// I0_K records the raw directional derivative I_0(K_i) for reporting.
struct DSample {
  std::size_t n = 0;
  std::vector<double> K_dot; // n        index 0 unused
  std::vector<double> I0_K;  // n
  std::vector<double> K_D;   // n*n      K_{i;j}
  std::vector<double> M_dot; // n*n
  std::vector<double> M_D;   // n*n*n    M_{ij;k}
};

// Curvature of the reduced spatial connection omega-tilde^i_j =
// omega^i_j - M^i_j omega^0, evaluated on spatial frame pairs.
struct BaseCurvatureSample {
  std::size_t n = 0;
  std::vector<double> Rt; // n*n*n*n   [i][j][k][l], slot 0 unused
};

// Builds the adapted frame at a point. Throws TimelikeViolation if the flow
// fails to be timelike there, DegenerateMetric on a singular metric,
// FrameDegenerate if Gram-Schmidt cannot complete, and SkipSetUnstable when
// a candidate sits in the ambiguous band (move the sample point).
FrameSample adapt_frame(const Scene& scene, const std::vector<double>& point);

DSample covariant_derivatives(const FrameSample& fs);

BaseCurvatureSample base_curvature(const FrameSample& fs);

// Frame components R^mu_{nu rho sigma} of the coordinate Riemann tensor.
std::vector<double> project_riemann(const FrameSample& fs, const RiemannSample& rs);

} // namespace rigidflow
