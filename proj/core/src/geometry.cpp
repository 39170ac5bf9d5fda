#include "rigidflow/geometry.hpp"

#include <cmath>

#include "rigidflow/errors.hpp"

namespace rigidflow {

std::vector<Jet2> metric_jets(const Scene& scene, const std::vector<double>& point) {
  const std::size_t n = scene.dimension;
  std::vector<Jet2> g(n * n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = mu; nu < n; ++nu) {
      Jet2 j = eval_jet2(*scene.metric[mu][nu], point, scene.parameters);
      g[ix2(n, mu, nu)] = j;
      g[ix2(n, nu, mu)] = j;
    }
  }
  return g;
}

std::vector<Jet2> flow_jets(const Scene& scene, const std::vector<double>& point) {
  const std::size_t n = scene.dimension;
  std::vector<Jet2> v(n);
  for (std::size_t mu = 0; mu < n; ++mu)
    v[mu] = eval_jet2(*scene.flow[mu], point, scene.parameters);
  return v;
}

MetricSample sample_metric(const Scene& scene, const std::vector<double>& point) {
  return pack_metric(scene.dimension, point, metric_jets(scene, point));
}

MetricSample pack_metric(std::size_t n, const std::vector<double>& point,
                         const std::vector<Jet2>& gj) {
  MetricSample ms;
  ms.n = n;
  ms.point = point;
  ms.g.assign(n * n, 0.0);
  ms.dg.assign(n * n * n, 0.0);
  ms.ddg.assign(n * n * n * n, 0.0);
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = 0; nu < n; ++nu) {
      const Jet2& j = gj[ix2(n, mu, nu)];
      ms.g[ix2(n, mu, nu)] = j.value();
      for (std::size_t a = 0; a < n; ++a) {
        ms.dg[ix3(n, a, mu, nu)] = j.grad(a);
        for (std::size_t b = 0; b < n; ++b)
          ms.ddg[ix4(n, a, b, mu, nu)] = j.hess(a, b);
      }
    }
  }
  if (!lu_invert(n, ms.g, ms.g_inv, ms.det) ||
      std::fabs(ms.det) <= kEpsNondegenerate)
    throw DegenerateMetric("metric determinant " + std::to_string(ms.det) +
                           " within " + std::to_string(kEpsNondegenerate) +
                           " of zero at the sample point");
  return ms;
}

ConnectionSample christoffel(const MetricSample& ms) {
  const std::size_t n = ms.n;
  ConnectionSample cs;
  cs.n = n;
  cs.Gamma.assign(n * n * n, 0.0);
  cs.dGamma.assign(n * n * n * n, 0.0);

  // d_alpha g^{mu sigma} = -g^{mu a} (d_alpha g_{a b}) g^{b sigma}
  std::vector<double> dginv(n * n * n, 0.0);
  for (std::size_t al = 0; al < n; ++al)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t sg = 0; sg < n; ++sg) {
        double s = 0.0;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            s -= ms.g_inv[ix2(n, mu, a)] * ms.dg[ix3(n, al, a, b)] * ms.g_inv[ix2(n, b, sg)];
        dginv[ix3(n, al, mu, sg)] = s;
      }

  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t rho = 0; rho < n; ++rho) {
        double s = 0.0;
        for (std::size_t sg = 0; sg < n; ++sg)
          s += ms.g_inv[ix2(n, mu, sg)] *
               (ms.dg[ix3(n, nu, sg, rho)] + ms.dg[ix3(n, rho, sg, nu)] -
                ms.dg[ix3(n, sg, nu, rho)]);
        cs.Gamma[ix3(n, mu, nu, rho)] = 0.5 * s;
      }

  for (std::size_t al = 0; al < n; ++al)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu)
        for (std::size_t rho = 0; rho < n; ++rho) {
          double s = 0.0;
          for (std::size_t sg = 0; sg < n; ++sg) {
            s += dginv[ix3(n, al, mu, sg)] *
                 (ms.dg[ix3(n, nu, sg, rho)] + ms.dg[ix3(n, rho, sg, nu)] -
                  ms.dg[ix3(n, sg, nu, rho)]);
            s += ms.g_inv[ix2(n, mu, sg)] *
                 (ms.ddg[ix4(n, al, nu, sg, rho)] + ms.ddg[ix4(n, al, rho, sg, nu)] -
                  ms.ddg[ix4(n, al, sg, nu, rho)]);
          }
          cs.dGamma[ix4(n, al, mu, nu, rho)] = 0.5 * s;
        }
  return cs;
}

RiemannSample riemann(const ConnectionSample& cs) {
  const std::size_t n = cs.n;
  RiemannSample rs;
  rs.n = n;
  rs.R.assign(n * n * n * n, 0.0);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t rho = 0; rho < n; ++rho)
        for (std::size_t sg = 0; sg < n; ++sg) {
          double s = cs.dGamma[ix4(n, rho, mu, nu, sg)] - cs.dGamma[ix4(n, sg, mu, nu, rho)];
          for (std::size_t la = 0; la < n; ++la)
            s += cs.Gamma[ix3(n, mu, la, rho)] * cs.Gamma[ix3(n, la, nu, sg)] -
                 cs.Gamma[ix3(n, mu, la, sg)] * cs.Gamma[ix3(n, la, nu, rho)];
          rs.R[ix4(n, mu, nu, rho, sg)] = s;
        }
  return rs;
}

std::vector<double> lower_riemann(const MetricSample& ms, const RiemannSample& rs) {
  const std::size_t n = ms.n;
  std::vector<double> low(n * n * n * n, 0.0);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t rho = 0; rho < n; ++rho)
        for (std::size_t sg = 0; sg < n; ++sg) {
          double s = 0.0;
          for (std::size_t la = 0; la < n; ++la)
            s += ms.g[ix2(n, mu, la)] * rs.R[ix4(n, la, nu, rho, sg)];
          low[ix4(n, mu, nu, rho, sg)] = s;
        }
  return low;
}

std::vector<double> lie_derivative_metric(const Scene& scene,
                                          const std::vector<double>& point) {
  const std::size_t n = scene.dimension;
  const std::vector<Jet2> gj = metric_jets(scene, point);
  const std::vector<Jet2> vj = flow_jets(scene, point);
  std::vector<double> lie(n * n, 0.0);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      double s = 0.0;
      for (std::size_t rho = 0; rho < n; ++rho) {
        s += vj[rho].value() * gj[ix2(n, mu, nu)].grad(rho);
        s += gj[ix2(n, rho, nu)].value() * vj[rho].grad(mu);
        s += gj[ix2(n, mu, rho)].value() * vj[rho].grad(nu);
      }
      lie[ix2(n, mu, nu)] = s;
    }
  return lie;
}

double constant_curvature_residual(const MetricSample& ms, const RiemannSample& rs,
                                   double kappa) {
  const std::size_t n = ms.n;
  const std::vector<double> low = lower_riemann(ms, rs);
  double worst = 0.0;
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t rho = 0; rho < n; ++rho)
        for (std::size_t sg = 0; sg < n; ++sg) {
          const double gg = ms.g[ix2(n, mu, rho)] * ms.g[ix2(n, nu, sg)] -
                            ms.g[ix2(n, mu, sg)] * ms.g[ix2(n, nu, rho)];
          const double r = std::fabs(low[ix4(n, mu, nu, rho, sg)] - kappa * gg);
          if (r > worst) worst = r;
        }
  return worst;
}

double fit_kappa(const MetricSample& ms, const RiemannSample& rs, double& residual) {
  const std::size_t n = ms.n;
  const std::vector<double> low = lower_riemann(ms, rs);
  double num = 0.0, den = 0.0;
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t rho = 0; rho < n; ++rho)
        for (std::size_t sg = 0; sg < n; ++sg) {
          const double gg = ms.g[ix2(n, mu, rho)] * ms.g[ix2(n, nu, sg)] -
                            ms.g[ix2(n, mu, sg)] * ms.g[ix2(n, nu, rho)];
          num += low[ix4(n, mu, nu, rho, sg)] * gg;
          den += gg * gg;
        }
  const double kappa = den > 0.0 ? num / den : 0.0;
  residual = constant_curvature_residual(ms, rs, kappa);
  return kappa;
}

Verdict killing_verdict(const Scene& scene,
                        const std::vector<std::vector<double>>& points, double tol) {
  Verdict v;
  v.criterion = "killing-direct";
  v.tolerance = tol;
  v.worst_residual = 0.0;
  for (const auto& p : points) {
    const std::vector<double> lie = lie_derivative_metric(scene, p);
    double worst = 0.0;
    for (double x : lie) worst = std::max(worst, std::fabs(x));
    if (worst > v.worst_residual) {
      v.worst_residual = worst;
      v.worst_point = p;
    }
  }
  if (v.worst_point.empty() && !points.empty()) v.worst_point = points.front();
  v.pass = v.worst_residual < tol;
  return v;
}

} // namespace rigidflow
