#include "rigidflow/kinematics.hpp"

#include <cmath>
#include <limits>

#include "rigidflow/errors.hpp"

namespace rigidflow {

KinematicInvariants kinematic_invariants(const FrameSample& fs) {
  const std::size_t n = fs.n;
  KinematicInvariants k;
  k.n = n;
  k.lambda = fs.lambda;
  k.skipped = fs.skipped;
  k.K.assign(n, 0.0);
  k.M.assign(n * n, 0.0);
  k.vorticity.assign(n * n, 0.0);
  k.shear.assign(n * n, 0.0);

  double k2 = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    k.K[i] = fs.K(i);
    k2 += k.K[i] * k.K[i];
  }
  k.K_norm = std::sqrt(k2);

  for (std::size_t i = 1; i < n; ++i) k.expansion += fs.M(i, i);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      const double m = fs.M(i, j);
      const double mt = fs.M(j, i);
      k.M[ix2(n, i, j)] = m;
      const double sym = 0.5 * (m + mt);
      const double asym = 0.5 * (m - mt);
      k.vorticity[ix2(n, i, j)] = asym;
      k.shear[ix2(n, i, j)] =
          sym - (i == j ? k.expansion / double(n - 1) : 0.0);
      k.vorticity_magnitude = std::max(k.vorticity_magnitude, std::fabs(asym));
      k.shear_magnitude =
          std::max(k.shear_magnitude, std::fabs(k.shear[ix2(n, i, j)]));
      k.rigidity_residual = std::max(k.rigidity_residual, std::fabs(sym));
    }
  return k;
}

Verdict rigidity_verdict(const std::vector<KinematicInvariants>& kin,
                         const std::vector<std::vector<double>>& points, double tol) {
  Verdict v;
  v.criterion = "firstprop";
  v.tolerance = tol;
  v.worst_residual = 0.0;
  for (std::size_t p = 0; p < kin.size(); ++p) {
    if (kin[p].rigidity_residual >= v.worst_residual || v.worst_point.empty()) {
      v.worst_residual = kin[p].rigidity_residual;
      v.worst_point = points[p];
    }
  }
  v.pass = v.worst_residual < tol;
  return v;
}

bool rotational_everywhere(const std::vector<KinematicInvariants>& kin,
                           double tol_rot, double& min_vorticity) {
  min_vorticity = 0.0;
  bool first = true;
  for (const auto& k : kin) {
    if (first || k.vorticity_magnitude < min_vorticity)
      min_vorticity = k.vorticity_magnitude;
    first = false;
  }
  return !first && min_vorticity > tol_rot;
}

IsometryCriteria isometry_via_criteria(const std::vector<FrameSample>& frames,
                                       const std::vector<DSample>& derivs,
                                       const std::vector<std::vector<double>>& points,
                                       const Verdict& rigidity, double tol) {
  if (!rigidity.pass)
    throw PreconditionViolated(
        "isometry criteria presuppose a rigid flow; rigidity residual " +
        std::to_string(rigidity.worst_residual) + " exceeds the tolerance");

  IsometryCriteria c;
  c.rfif.criterion = "rfif";
  c.rfif.tolerance = tol;
  c.finalc.criterion = "finalc";
  c.finalc.tolerance = tol;

  for (std::size_t p = 0; p < frames.size(); ++p) {
    const std::size_t n = frames[p].n;
    const DSample& ds = derivs[p];
    double ka = 0.0, kd = 0.0, md = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      kd = std::max(kd, std::fabs(ds.K_dot[i]));
      for (std::size_t j = 1; j < n; ++j) {
        ka = std::max(ka, std::fabs(ds.K_D[ix2(n, i, j)] - ds.K_D[ix2(n, j, i)]));
        md = std::max(md, std::fabs(ds.M_dot[ix2(n, i, j)]));
      }
    }
    c.max_K_antisym = std::max(c.max_K_antisym, ka);
    c.max_K_dot = std::max(c.max_K_dot, kd);
    c.max_M_dot = std::max(c.max_M_dot, md);
    const double r1 = std::max(ka, kd);
    if (r1 >= c.rfif.worst_residual || c.rfif.worst_point.empty()) {
      c.rfif.worst_residual = r1;
      c.rfif.worst_point = points[p];
    }
    const double r2 = std::max(md, kd);
    if (r2 >= c.finalc.worst_residual || c.finalc.worst_point.empty()) {
      c.finalc.worst_residual = r2;
      c.finalc.worst_point = points[p];
    }
  }
  c.rfif.pass = c.rfif.worst_residual < tol;
  c.finalc.pass = c.finalc.worst_residual < tol;
  return c;
}

TimelikeScan timelike_domain_check(const Scene& scene,
                                   const std::vector<std::vector<double>>& points) {
  const std::size_t n = scene.dimension;
  TimelikeScan scan;
  scan.vv.assign(points.size(), 0.0);
  for (std::size_t p = 0; p < points.size(); ++p) {
    double vv = 0.0;
    bool ok = true;
    try {
      std::vector<double> v(n);
      for (std::size_t mu = 0; mu < n; ++mu)
        v[mu] = eval_value(*scene.flow[mu], points[p], scene.parameters);
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = mu; nu < n; ++nu) {
          const double g =
              eval_value(*scene.metric[mu][nu], points[p], scene.parameters);
          vv += (mu == nu ? 1.0 : 2.0) * g * v[mu] * v[nu];
        }
    } catch (const NumericalError&) {
      ok = false;
      vv = std::numeric_limits<double>::quiet_NaN();
    }
    scan.vv[p] = vv;
    if (!ok || vv >= -kEpsTimelike) scan.flagged.push_back(p);
  }
  return scan;
}

Verdict homogeneity_verdict(const Scene& scene,
                            const std::vector<std::vector<double>>& points,
                            double tol, double& kappa_out) {
  Verdict v;
  v.criterion = "homogeneity";
  v.tolerance = tol;
  v.worst_residual = 0.0;

  double kappa_ref = 0.0;
  bool have_ref = scene.model_kappa.has_value();
  if (have_ref) kappa_ref = *scene.model_kappa;

  for (std::size_t p = 0; p < points.size(); ++p) {
    const MetricSample ms = sample_metric(scene, points[p]);
    const RiemannSample rs = riemann(christoffel(ms));
    double res;
    if (scene.model_kappa) {
      res = constant_curvature_residual(ms, rs, kappa_ref);
    } else {
      double fit_res;
      const double kap = fit_kappa(ms, rs, fit_res);
      if (!have_ref) {
        kappa_ref = kap;
        have_ref = true;
      }
      res = std::max(fit_res, std::fabs(kap - kappa_ref));
    }
    if (res >= v.worst_residual || v.worst_point.empty()) {
      v.worst_residual = res;
      v.worst_point = points[p];
    }
  }
  kappa_out = kappa_ref;
  v.pass = !points.empty() && v.worst_residual < tol;
  return v;
}

TheoremReport theorem_conclusion(const Verdict& homogeneity, double kappa,
                                 bool kappa_declared, const Verdict& rigidity,
                                 bool rotational, double min_vorticity,
                                 const Verdict& killing) {
  TheoremReport t;
  t.homogeneity = homogeneity;
  t.kappa = kappa;
  t.kappa_declared = kappa_declared;
  t.rigidity = rigidity;
  t.rotational = rotational;
  t.min_vorticity = min_vorticity;
  t.killing = killing;
  if (homogeneity.pass && rigidity.pass && rotational)
    t.conclusion = killing.pass ? "theorem-instantiated" : "counterexample-candidate";
  else
    t.conclusion = "hypothesis-unmet";
  return t;
}

} // namespace rigidflow
