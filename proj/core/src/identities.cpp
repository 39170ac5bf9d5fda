#include "rigidflow/identities.hpp"

#include <cmath>

namespace rigidflow {

void consider_tuple(IdentityResult& r, const std::vector<double>& point,
                    const std::vector<std::size_t>& tuple,
                    const std::vector<double>& terms) {
  double sum = 0.0, big = 0.0;
  for (double t : terms) {
    sum += t;
    big = std::max(big, std::fabs(t));
  }
  const double scale = 1.0 + big;
  const double res = std::fabs(sum) / scale;
  if (res > r.residual || r.worst_point.empty()) {
    r.residual = std::max(r.residual, res);
    r.worst_point = point;
    r.worst_tuple = tuple;
    r.worst_terms = terms;
    r.worst_scale = scale;
  }
}

void check_first_structural(const FrameSample& fs, IdentityResult& r) {
  const std::size_t n = fs.n;
  r.name = "first_structural";
  // connection 1-form in coordinate components
  std::vector<double> w1(n * n * n, 0.0); // [mu][nu][alpha]
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t a = 0; a < n; ++a) {
        double s = 0.0;
        for (std::size_t rho = 0; rho < n; ++rho)
          s += fs.ghat(mu, nu, rho) * fs.omega[ix2(n, rho, a)];
        w1[ix3(n, mu, nu, a)] = s;
      }
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        double conn_a = 0.0, conn_b = 0.0;
        for (std::size_t nu = 0; nu < n; ++nu) {
          conn_a += fs.omega[ix2(n, nu, a)] * w1[ix3(n, mu, nu, b)];
          conn_b += fs.omega[ix2(n, nu, b)] * w1[ix3(n, mu, nu, a)];
        }
        consider_tuple(r, fs.point, {mu, a, b},
                       {fs.domega[ix3(n, a, mu, b)], -fs.domega[ix3(n, b, mu, a)],
                        -conn_a, conn_b});
      }
}

void check_lambda_relation(const FrameSample& fs, IdentityResult& r) {
  const std::size_t n = fs.n;
  r.name = "lambda_relation";
  consider_tuple(r, fs.point, {0}, {fs.dir(0, fs.lambda_grad.data())});
  for (std::size_t i = 1; i < n; ++i)
    consider_tuple(r, fs.point, {i},
                   {fs.dir(i, fs.lambda_grad.data()), -fs.lambda * fs.K(i)});
}

void check_confusion(const FrameSample& fs, const DSample& ds, IdentityResult& r) {
  const std::size_t n = fs.n;
  r.name = "confusion";
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      consider_tuple(r, fs.point, {i, j},
                     {ds.K_D[ix2(n, i, j)], -ds.K_D[ix2(n, j, i)],
                      -ds.M_dot[ix2(n, i, j)], ds.M_dot[ix2(n, j, i)]});
}

void check_acceleration_evolution(const FrameSample& fs, const DSample& ds,
                                  const double* Rhat, IdentityResult& r) {
  const std::size_t n = fs.n;
  r.name = "eq16";
  r.mode = Rhat ? "general" : "flat";
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      double mtm = 0.0;
      for (std::size_t k = 1; k < n; ++k) mtm += fs.M(k, i) * fs.M(k, j);
      std::vector<double> terms = {ds.K_D[ix2(n, i, j)], fs.K(i) * fs.K(j), mtm};
      if (Rhat) terms.push_back(Rhat[ix4(n, 0, i, 0, j)]);
      terms.push_back(-ds.M_dot[ix2(n, i, j)]);
      consider_tuple(r, fs.point, {i, j}, terms);
    }
}

void check_gooaffa(const FrameSample& fs, const BaseCurvatureSample& bc,
                   const double* Rhat, IdentityResult& r) {
  const std::size_t n = fs.n;
  r.name = "gooaffa";
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          consider_tuple(r, fs.point, {i, j, a, b},
                         {Rhat[ix4(n, i, j, a, b)], -bc.Rt[ix4(n, i, j, a, b)],
                          -fs.M(i, j) * (fs.M(a, b) - fs.M(b, a)),
                          -fs.M(i, a) * fs.M(j, b), fs.M(i, b) * fs.M(j, a)});
}

void check_pow1_trace(const FrameSample& fs, const BaseCurvatureSample& bc,
                      const double* Rhat, IdentityResult& r) {
  const std::size_t n = fs.n;
  r.name = "pow1_trace";
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      if (i == j) continue;
      consider_tuple(r, fs.point, {i, j},
                     {bc.Rt[ix4(n, i, j, j, i)], -Rhat[ix4(n, i, j, j, i)],
                      -3.0 * fs.M(i, j) * fs.M(i, j)});
    }
}

void check_R0ijk(const FrameSample& fs, const DSample& ds, IdentityResult& r) {
  const std::size_t n = fs.n;
  r.name = "R0ijk";
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t k = 1; k < n; ++k) {
        if (j == k) continue;
        consider_tuple(r, fs.point, {i, j, k},
                       {ds.M_D[ix3(n, i, j, k)], -ds.M_D[ix3(n, i, k, j)],
                        -2.0 * fs.K(i) * fs.M(j, k)});
      }
}

} // namespace rigidflow
