#ifndef RIGIDFLOW_GEOMETRY_HPP
#define RIGIDFLOW_GEOMETRY_HPP

#include <vector>

#include "rigidflow/linalg.hpp"
#include "rigidflow/scene.hpp"
#include "rigidflow/verdict.hpp"

namespace rigidflow {

// Metric data at one point, through second derivatives. Index layout:
//   g, g_inv      [mu][nu]
//   dg            [alpha][mu][nu]        d_alpha g_{mu nu}
//   ddg           [alpha][beta][mu][nu]  d_alpha d_beta g_{mu nu}
struct MetricSample {
  std::size_t n = 0;
  std::vector<double> point;
  std::vector<double> g, g_inv;
  std::vector<double> dg, ddg;
  double det = 0.0;
};

// Christoffel symbols and their first coordinate derivatives.
//   Gamma   [mu][nu][rho]         Gamma^mu_{nu rho}
//   dGamma  [alpha][mu][nu][rho]  d_alpha Gamma^mu_{nu rho}
struct ConnectionSample {
  std::size_t n = 0;
  std::vector<double> Gamma, dGamma;
};

// Riemann tensor R^mu_{nu rho sigma}, index layout [mu][nu][rho][sigma].
struct RiemannSample {
  std::size_t n = 0;
  std::vector<double> R;
};

// Evaluates every metric component as a second-order jet. Shared
// upper/lower Expr nodes are evaluated once. Result layout [mu][nu].
std::vector<Jet2> metric_jets(const Scene& scene, const std::vector<double>& point);
std::vector<Jet2> flow_jets(const Scene& scene, const std::vector<double>& point);

// Throws DegenerateMetric when |det g| <= kEpsNondegenerate.
MetricSample sample_metric(const Scene& scene, const std::vector<double>& point);

// Same, starting from already evaluated metric jets (layout [mu][nu]).
MetricSample pack_metric(std::size_t n, const std::vector<double>& point,
                         const std::vector<Jet2>& gj);

ConnectionSample christoffel(const MetricSample& ms);

RiemannSample riemann(const ConnectionSample& cs);

// R_{mu nu rho sigma} = g_{mu lambda} R^lambda_{nu rho sigma}.
std::vector<double> lower_riemann(const MetricSample& ms, const RiemannSample& rs);

// (L_V g)_{mu nu} = V^rho d_rho g_{mu nu} + g_{rho nu} d_mu V^rho
//                 + g_{mu rho} d_nu V^rho. Layout [mu][nu].
std::vector<double> lie_derivative_metric(const Scene& scene,
                                          const std::vector<double>& point);

// Max-abs residual of R_{mu nu rho sigma} = kappa (g_{mu rho} g_{nu sigma}
// - g_{mu sigma} g_{nu rho}) over all index combinations.
double constant_curvature_residual(const MetricSample& ms, const RiemannSample& rs,
                                   double kappa);

// Least-squares fit of a single kappa to the lowered Riemann tensor against
// g^g at one point. Returns the fitted kappa; `residual` receives the
// max-abs defect of the fit.
double fit_kappa(const MetricSample& ms, const RiemannSample& rs, double& residual);

// Pass iff max entry of lie_derivative_metric over all points < tol.
Verdict killing_verdict(const Scene& scene,
                        const std::vector<std::vector<double>>& points, double tol);

} // namespace rigidflow

#endif
