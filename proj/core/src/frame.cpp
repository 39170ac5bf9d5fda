#include "rigidflow/frame.hpp"

#include <cmath>
#include <string>

#include "rigidflow/errors.hpp"

namespace rigidflow {

namespace {

// g(u, v) with full second-order derivative information
Jet2 inner(std::size_t n, const std::vector<Jet2>& gj, const std::vector<Jet2>& u,
           const std::vector<Jet2>& v) {
  Jet2 s = Jet2::constant(n, 0.0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s = s + gj[ix2(n, a, b)] * u[a] * v[b];
  return s;
}

double grad_inf(const Jet2& j) {
  double m = 0.0;
  for (std::size_t a = 0; a < j.dim(); ++a) m = std::max(m, std::fabs(j.grad(a)));
  return m;
}

double hess_inf(const Jet2& j) {
  double m = 0.0;
  for (std::size_t a = 0; a < j.dim(); ++a)
    for (std::size_t b = a; b < j.dim(); ++b) m = std::max(m, std::fabs(j.hess(a, b)));
  return m;
}

} // namespace

FrameSample adapt_frame(const Scene& scene, const std::vector<double>& point) {
  const std::size_t n = scene.dimension;
  const std::vector<Jet2> gj = metric_jets(scene, point);
  const std::vector<Jet2> vj = flow_jets(scene, point);

  FrameSample fs;
  fs.n = n;
  fs.point = point;
  fs.metric = pack_metric(n, point, gj);
  fs.conn = christoffel(fs.metric);
  fs.eta.assign(n, 1.0);
  fs.eta[0] = -1.0;

  const Jet2 vv = inner(n, gj, vj, vj);
  if (vv.value() >= -kEpsTimelike)
    throw TimelikeViolation("g(V,V) = " + std::to_string(vv.value()) +
                            " is not below -" + std::to_string(kEpsTimelike) +
                            " at the sample point");
  const Jet2 lam = sqrt(-vv);
  fs.lambda = lam.value();
  fs.lambda_grad.assign(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) fs.lambda_grad[a] = lam.grad(a);

  // frame vectors as jets; I_0 = V / lambda, then modified Gram-Schmidt over
  // the coordinate basis in coordinate order
  std::vector<std::vector<Jet2>> I;
  I.reserve(n);
  {
    std::vector<Jet2> i0(n);
    for (std::size_t a = 0; a < n; ++a) i0[a] = vj[a] / lam;
    I.push_back(std::move(i0));
  }

  for (std::size_t k = 0; k < n && I.size() < n; ++k) {
    std::vector<Jet2> w(n);
    for (std::size_t a = 0; a < n; ++a) w[a] = Jet2::constant(n, a == k ? 1.0 : 0.0);
    for (std::size_t mu = 0; mu < I.size(); ++mu) {
      const Jet2 c = inner(n, gj, w, I[mu]);
      for (std::size_t a = 0; a < n; ++a)
        w[a] = w[a] - fs.eta[mu] * c * I[mu][a];
    }
    const Jet2 s = inner(n, gj, w, w);
    if (s.value() < kEpsGramSchmidt) {
      // a skip is trusted only when the residual stays flat to second order,
      // otherwise the skip set flips somewhere nearby
      if (grad_inf(s) < kEpsSkipGradient && hess_inf(s) < kEpsSkipHessian) {
        fs.skipped.push_back(k);
        continue;
      }
      throw SkipSetUnstable("candidate " + std::to_string(k) +
                            " has near-zero residual with non-flat derivatives; "
                            "move the sample point");
    }
    if (s.value() < kEpsAcceptNorm)
      throw SkipSetUnstable("candidate " + std::to_string(k) +
                            " has residual norm in the ambiguous band; "
                            "move the sample point");
    const Jet2 norm = sqrt(s);
    std::vector<Jet2> e(n);
    for (std::size_t a = 0; a < n; ++a) e[a] = w[a] / norm;
    I.push_back(std::move(e));
  }
  if (I.size() < n)
    throw FrameDegenerate("Gram-Schmidt accepted only " +
                          std::to_string(I.size() - 1) + " of " +
                          std::to_string(n - 1) + " spacelike directions");
  for (std::size_t k = fs.skipped.size() + I.size() - 1; k < n; ++k)
    fs.skipped.push_back(k); // span closed early, rest are dependent

  fs.I.assign(n * n, 0.0);
  fs.dI.assign(n * n * n, 0.0);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t a = 0; a < n; ++a) {
      fs.I[ix2(n, mu, a)] = I[mu][a].value();
      for (std::size_t b = 0; b < n; ++b)
        fs.dI[ix3(n, b, mu, a)] = I[mu][a].grad(b);
    }

  // coframe omega^mu_alpha = eta^{mu mu} g_{alpha beta} I_mu^beta
  fs.omega.assign(n * n, 0.0);
  fs.domega.assign(n * n * n, 0.0);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t a = 0; a < n; ++a) {
      double v = 0.0;
      for (std::size_t b = 0; b < n; ++b)
        v += fs.metric.g[ix2(n, a, b)] * fs.I[ix2(n, mu, b)];
      fs.omega[ix2(n, mu, a)] = fs.eta[mu] * v;
      for (std::size_t d = 0; d < n; ++d) {
        double dv = 0.0;
        for (std::size_t b = 0; b < n; ++b)
          dv += fs.metric.dg[ix3(n, d, a, b)] * fs.I[ix2(n, mu, b)] +
                fs.metric.g[ix2(n, a, b)] * fs.dI[ix3(n, d, mu, b)];
        fs.domega[ix3(n, d, mu, a)] = fs.eta[mu] * dv;
      }
    }

  // T^alpha_{nu rho} = (nabla_{I_rho} I_nu)^alpha and its gradient, then
  // contract with the coframe to get the frame connection
  std::vector<double> T(n * n * n, 0.0), dT(n * n * n * n, 0.0);
  const std::vector<double>& G = fs.conn.Gamma;
  const std::vector<double>& dG = fs.conn.dGamma;
  for (std::size_t al = 0; al < n; ++al)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t rho = 0; rho < n; ++rho) {
        double t = 0.0;
        for (std::size_t b = 0; b < n; ++b) {
          double cov = fs.dI[ix3(n, b, nu, al)];
          for (std::size_t c = 0; c < n; ++c)
            cov += G[ix3(n, al, b, c)] * fs.I[ix2(n, nu, c)];
          t += fs.I[ix2(n, rho, b)] * cov;
        }
        T[ix3(n, al, nu, rho)] = t;
        for (std::size_t d = 0; d < n; ++d) {
          double dt = 0.0;
          for (std::size_t b = 0; b < n; ++b) {
            double cov = fs.dI[ix3(n, b, nu, al)];
            double dcov = I[nu][al].hess(d, b);
            for (std::size_t c = 0; c < n; ++c) {
              cov += G[ix3(n, al, b, c)] * fs.I[ix2(n, nu, c)];
              dcov += dG[ix4(n, d, al, b, c)] * fs.I[ix2(n, nu, c)] +
                      G[ix3(n, al, b, c)] * fs.dI[ix3(n, d, nu, c)];
            }
            dt += fs.dI[ix3(n, d, rho, b)] * cov + fs.I[ix2(n, rho, b)] * dcov;
          }
          dT[ix4(n, d, al, nu, rho)] = dt;
        }
      }

  fs.gh.assign(n * n * n, 0.0);
  fs.dgh.assign(n * n * n * n, 0.0);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t rho = 0; rho < n; ++rho) {
        double v = 0.0;
        for (std::size_t al = 0; al < n; ++al)
          v += fs.omega[ix2(n, mu, al)] * T[ix3(n, al, nu, rho)];
        fs.gh[ix3(n, mu, nu, rho)] = v;
        for (std::size_t d = 0; d < n; ++d) {
          double dv = 0.0;
          for (std::size_t al = 0; al < n; ++al)
            dv += fs.domega[ix3(n, d, mu, al)] * T[ix3(n, al, nu, rho)] +
                  fs.omega[ix2(n, mu, al)] * dT[ix4(n, d, al, nu, rho)];
          fs.dgh[ix4(n, d, mu, nu, rho)] = dv;
        }
      }

  return fs;
}

DSample covariant_derivatives(const FrameSample& fs) {
  const std::size_t n = fs.n;
  DSample ds;
  ds.n = n;
  ds.K_dot.assign(n, 0.0);
  ds.I0_K.assign(n, 0.0);
  ds.K_D.assign(n * n, 0.0);
  ds.M_dot.assign(n * n, 0.0);
  ds.M_D.assign(n * n * n, 0.0);

  std::vector<double> df(n);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) df[a] = fs.dghat(a, i, 0, 0);
    ds.I0_K[i] = fs.dir(0, df.data());
    double corr = 0.0;
    for (std::size_t k = 1; k < n; ++k)
      corr += fs.K(k) * (fs.B(k, i) - fs.M(k, i));
    ds.K_dot[i] = ds.I0_K[i] - corr;
    for (std::size_t j = 1; j < n; ++j) {
      double s = fs.dir(j, df.data());
      for (std::size_t k = 1; k < n; ++k) s -= fs.K(k) * fs.A(k, i, j);
      ds.K_D[ix2(n, i, j)] = s;
    }
  }

  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t a = 0; a < n; ++a) df[a] = fs.dghat(a, i, 0, j);
      double s = fs.dir(0, df.data());
      for (std::size_t l = 1; l < n; ++l)
        s -= fs.M(l, j) * (fs.B(l, i) - fs.M(l, i)) +
             fs.M(i, l) * (fs.B(l, j) - fs.M(l, j));
      ds.M_dot[ix2(n, i, j)] = s;
      for (std::size_t k = 1; k < n; ++k) {
        double t = fs.dir(k, df.data());
        for (std::size_t l = 1; l < n; ++l)
          t -= fs.M(l, j) * fs.A(l, i, k) + fs.M(i, l) * fs.A(l, j, k);
        ds.M_D[ix3(n, i, j, k)] = t;
      }
    }

  return ds;
}

BaseCurvatureSample base_curvature(const FrameSample& fs) {
  const std::size_t n = fs.n;

  // omega-tilde^i_j as a coordinate 1-form field with gradient:
  // wt^i_{j alpha} = A^i_{jk} omega^k_alpha + (B^i_j - M^i_j) omega^0_alpha
  std::vector<double> wt(n * n * n, 0.0), dwt(n * n * n * n, 0.0);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a) {
        double v = (fs.B(i, j) - fs.M(i, j)) * fs.omega[ix2(n, 0, a)];
        for (std::size_t k = 1; k < n; ++k)
          v += fs.A(i, j, k) * fs.omega[ix2(n, k, a)];
        wt[ix3(n, i, j, a)] = v;
        for (std::size_t d = 0; d < n; ++d) {
          double dv = (fs.dghat(d, i, j, 0) - fs.dghat(d, i, 0, j)) *
                          fs.omega[ix2(n, 0, a)] +
                      (fs.B(i, j) - fs.M(i, j)) * fs.domega[ix3(n, d, 0, a)];
          for (std::size_t k = 1; k < n; ++k)
            dv += fs.dghat(d, i, j, k) * fs.omega[ix2(n, k, a)] +
                  fs.A(i, j, k) * fs.domega[ix3(n, d, k, a)];
          dwt[ix4(n, d, i, j, a)] = dv;
        }
      }

  BaseCurvatureSample bc;
  bc.n = n;
  bc.Rt.assign(n * n * n * n, 0.0);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t l = 1; l < n; ++l) {
          double s = 0.0;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              s += fs.I[ix2(n, k, a)] * fs.I[ix2(n, l, b)] *
                   (dwt[ix4(n, a, i, j, b)] - dwt[ix4(n, b, i, j, a)]);
          for (std::size_t m = 1; m < n; ++m)
            s += fs.A(i, m, k) * fs.A(m, j, l) - fs.A(i, m, l) * fs.A(m, j, k);
          bc.Rt[ix4(n, i, j, k, l)] = s;
        }
  return bc;
}

std::vector<double> project_riemann(const FrameSample& fs, const RiemannSample& rs) {
  const std::size_t n = fs.n;
  // contract one axis at a time to keep this O(n^5)
  std::vector<double> t1(n * n * n * n, 0.0), t2(n * n * n * n, 0.0);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          double s = 0.0;
          for (std::size_t a = 0; a < n; ++a)
            s += fs.omega[ix2(n, mu, a)] * rs.R[ix4(n, a, b, c, d)];
          t1[ix4(n, mu, b, c, d)] = s;
        }
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          double s = 0.0;
          for (std::size_t b = 0; b < n; ++b)
            s += fs.I[ix2(n, nu, b)] * t1[ix4(n, mu, b, c, d)];
          t2[ix4(n, mu, nu, c, d)] = s;
        }
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t rho = 0; rho < n; ++rho)
        for (std::size_t d = 0; d < n; ++d) {
          double s = 0.0;
          for (std::size_t c = 0; c < n; ++c)
            s += fs.I[ix2(n, rho, c)] * t2[ix4(n, mu, nu, c, d)];
          t1[ix4(n, mu, nu, rho, d)] = s;
        }
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t rho = 0; rho < n; ++rho)
        for (std::size_t sg = 0; sg < n; ++sg) {
          double s = 0.0;
          for (std::size_t d = 0; d < n; ++d)
            s += fs.I[ix2(n, sg, d)] * t1[ix4(n, mu, nu, rho, d)];
          t2[ix4(n, mu, nu, rho, sg)] = s;
        }
  return t2;
}

} // namespace rigidflow
