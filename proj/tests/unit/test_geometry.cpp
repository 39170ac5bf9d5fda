#include <doctest.h>

#include <cmath>
#include <vector>

#include "rigidflow/errors.hpp"
#include "rigidflow/frame.hpp"
#include "rigidflow/geometry.hpp"
#include "rigidflow/models.hpp"

using namespace rigidflow;

namespace {

Scene rindler_scene(double a) {
  Box b;
  b.min = {0.0, -0.5, -0.5};
  b.max = {1.0, 0.5, 0.5};
  return make_scene(3, "rindler", {"t", "x1", "x2"},
                    {{"-(1+a*x1)^2", "0", "0"}, {"1", "0"}, {"1"}},
                    {"1", "0", "0"}, {{"a", a}}, 0.0, b);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

} // namespace

TEST_CASE("flat metric has zero connection and curvature") {
  Scene s = build_scene("minkowski", 4, {}, "static", {});
  const std::vector<double> pt = {0.2, 0.4, -0.3, 0.9};
  MetricSample ms = sample_metric(s, pt);
  CHECK(ms.det == doctest::Approx(-1.0));
  ConnectionSample cs = christoffel(ms);
  CHECK(max_abs(cs.Gamma) == doctest::Approx(0.0));
  RiemannSample rs = riemann(cs);
  CHECK(max_abs(rs.R) == doctest::Approx(0.0));
}

TEST_CASE("rindler chart connection closed forms") {
  const double a = 0.3;
  Scene s = rindler_scene(a);
  const std::vector<double> pt = {0.7, 0.2, 0.1};
  const double f = 1 + a * pt[1];
  MetricSample ms = sample_metric(s, pt);
  ConnectionSample cs = christoffel(ms);
  const std::size_t n = 3;
  // Gamma^0_{01} = a/f, Gamma^1_{00} = a f, everything else zero
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t rho = 0; rho < n; ++rho) {
        const double g = cs.Gamma[ix3(n, mu, nu, rho)];
        if (mu == 0 && ((nu == 0 && rho == 1) || (nu == 1 && rho == 0)))
          CHECK(g == doctest::Approx(a / f));
        else if (mu == 1 && nu == 0 && rho == 0)
          CHECK(g == doctest::Approx(a * f));
        else
          CHECK(g == doctest::Approx(0.0));
      }
  // still flat
  RiemannSample rs = riemann(cs);
  CHECK(max_abs(rs.R) < 1e-12);
}

TEST_CASE("constant curvature chart fits its declared kappa") {
  for (double kappa : {1.0, -1.0}) {
    Scene s = build_scene("constant_curvature", 4, {{"kappa", kappa}}, "static", {});
    const std::vector<double> pt = {0.1, 0.2, 0.35, 0.25};
    MetricSample ms = sample_metric(s, pt);
    RiemannSample rs = riemann(christoffel(ms));
    CHECK(constant_curvature_residual(ms, rs, kappa) < 1e-11);
    double defect = 0.0;
    CHECK(fit_kappa(ms, rs, defect) == doctest::Approx(kappa).epsilon(1e-10));
    CHECK(defect < 1e-11);
  }
}

TEST_CASE("lowered riemann symmetries on a curved product metric") {
  Scene s = build_scene("einstein_static", 4, {}, "static", {});
  const std::vector<double> pt = {0.0, 0.5, 0.3, 0.6};
  MetricSample ms = sample_metric(s, pt);
  RiemannSample rs = riemann(christoffel(ms));
  const std::vector<double> Rl = lower_riemann(ms, rs);
  const std::size_t n = 4;
  CHECK(max_abs(Rl) > 0.1); // genuinely curved
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t sg = 0; sg < n; ++sg) {
          const double v = Rl[ix4(n, m, nu, r, sg)];
          CHECK(v == doctest::Approx(-Rl[ix4(n, nu, m, r, sg)]).epsilon(1e-10).scale(1.0));
          CHECK(v == doctest::Approx(-Rl[ix4(n, m, nu, sg, r)]).epsilon(1e-10).scale(1.0));
          CHECK(v == doctest::Approx(Rl[ix4(n, r, sg, m, nu)]).epsilon(1e-10).scale(1.0));
          const double bianchi = v + Rl[ix4(n, m, r, sg, nu)] + Rl[ix4(n, m, sg, nu, r)];
          CHECK(bianchi == doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
        }
}

TEST_CASE("lie derivative detects killing and non-killing flows") {
  Scene rot = build_scene("minkowski", 4, {}, "rotating", {{"Omega", 0.5}});
  const std::vector<double> pt = {0.1, 0.8, 0.5, -0.2};
  CHECK(max_abs(lie_derivative_metric(rot, pt)) < 1e-14);

  Scene mil = build_scene("minkowski", 3, {}, "milne", {});
  const std::vector<double> mp = {1.5, 0.2, 0.0};
  // V = t d_t + x1 d_x1 rescales the metric: L_V g = 2 diag(-1, 1, 0)
  const std::vector<double> lie = lie_derivative_metric(mil, mp);
  CHECK(lie[0 * 3 + 0] == doctest::Approx(-2.0));
  CHECK(lie[1 * 3 + 1] == doctest::Approx(2.0));
  CHECK(lie[2 * 3 + 2] == doctest::Approx(0.0));

  const std::vector<std::vector<double>> pts = {pt};
  CHECK(killing_verdict(rot, pts, 1e-6).pass);
  CHECK_FALSE(killing_verdict(mil, {mp}, 1e-6).pass);
  CHECK(killing_verdict(mil, {mp}, 1e-6).worst_residual == doctest::Approx(2.0));
}

TEST_CASE("adapted frame at the rotating anchor") {
  Scene s = build_scene("minkowski", 4, {}, "rotating", {{"Omega", 0.5}});
  const std::vector<double> pt = {0.0, 1.0, 0.0, 0.0};
  FrameSample fs = adapt_frame(s, pt);
  const std::size_t n = 4;

  CHECK(fs.lambda == doctest::Approx(0.8660254037844386).epsilon(1e-15));
  CHECK(fs.K(1) == doctest::Approx(0.0).scale(1.0));
  CHECK(fs.K(2) == doctest::Approx(-1.0 / 3.0));
  CHECK(fs.K(3) == doctest::Approx(0.0).scale(1.0));
  CHECK(fs.M(1, 2) == doctest::Approx(-2.0 / 3.0));
  CHECK(fs.M(2, 1) == doctest::Approx(2.0 / 3.0));
  CHECK(fs.M(1, 1) == doctest::Approx(0.0).scale(1.0));
  REQUIRE(fs.skipped.size() == 1);
  CHECK(fs.skipped[0] == 2);

  // coframe duality and frame orthonormality
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      double d = 0.0;
      for (std::size_t al = 0; al < n; ++al)
        d += fs.omega[ix2(n, mu, al)] * fs.I[ix2(n, nu, al)];
      CHECK(d == doctest::Approx(mu == nu ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
    }

  // frame metric is eta
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      double d = 0.0;
      for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = 0; be < n; ++be)
          d += fs.metric.g[ix2(n, al, be)] * fs.I[ix2(n, mu, al)] * fs.I[ix2(n, nu, be)];
      const double want = mu == nu ? (mu == 0 ? -1.0 : 1.0) : 0.0;
      CHECK(d == doctest::Approx(want).epsilon(1e-12).scale(1.0));
    }

  // metric antisymmetry of the frame connection: ghat_{(mu nu) rho} = 0
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t rho = 0; rho < n; ++rho) {
        const double lo = fs.eta[mu] * fs.ghat(mu, nu, rho) +
                          fs.eta[nu] * fs.ghat(nu, mu, rho);
        CHECK(lo == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
      }
}

TEST_CASE("frame rejects causality violations") {
  Scene s = build_scene("minkowski", 4, {}, "rotating", {{"Omega", 0.9}});
  // Omega^2 rho^2 = 0.81 * 2 * 1.15^2 > 1: the flow is spacelike here
  CHECK_THROWS_AS(adapt_frame(s, {0.0, 1.15, 1.15, 0.0}), TimelikeViolation);

  // exactly null flow
  Box b;
  b.min = {-1, -1};
  b.max = {1, 1};
  Scene nul = make_scene(2, "null", {"t", "x1"}, {{"-1", "0"}, {"1"}},
                         {"1", "1"}, {}, 0.0, b);
  CHECK_THROWS_AS(adapt_frame(nul, {0.0, 0.0}), TimelikeViolation);
}

TEST_CASE("near-degenerate spatial direction is reported, not guessed") {
  // g_11 = x1^2 pinches off near x1 = 0; at x1 = 3e-4 the candidate norm
  // lands between the skip and accept thresholds
  Box b;
  b.min = {-1, -1, -1};
  b.max = {1, 1, 1};
  Scene s = make_scene(3, "pinch", {"t", "x1", "x2"},
                       {{"-1", "0", "0"}, {"x1^2", "0"}, {"1"}},
                       {"1", "0", "0"}, {}, std::nullopt, b);
  CHECK_THROWS_AS(adapt_frame(s, {0.0, 3e-4, 0.0}), SkipSetUnstable);
  // far from the pinch the frame is fine; only the candidate parallel to
  // I_0 is skipped
  FrameSample fs = adapt_frame(s, {0.0, 0.7, 0.0});
  CHECK(fs.skipped == std::vector<std::size_t>{0});
}
