#include "rigidflow/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rigidflow/errors.hpp"

namespace rigidflow {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_point(const std::vector<double>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += " ";
    s += fmt(p[i]);
  }
  return s + ")";
}

double identity_tolerance(const Tolerances& tol, const std::string& name) {
  return name == "lambda_relation" ? tol.lambda : tol.identity;
}

bool identity_pass(const AnalysisResult& r, const IdentityResult& id) {
  return id.residual < identity_tolerance(r.tol, id.name);
}

const Verdict* find_verdict(const AnalysisResult& r, const std::string& name) {
  for (const auto& v : r.verdicts)
    if (v.criterion == name) return &v;
  return nullptr;
}

const char* kConventionLines[] = {
    "frame: I_0 = V/lambda; spacelike I_i by Gram-Schmidt over the coordinate "
    "directions in coordinate order",
    "connection: ghat^mu_{nu rho} = omega^mu(nabla_{I_rho} I_nu); "
    "K_i = ghat^i_{00}; M_ij = ghat^i_{0j}",
    "antisymmetrization: weight one, T[ij] = T_ij - T_ji",
    "residuals: identities |sum| / (1 + max |term|); verdicts raw",
};

} // namespace

std::vector<std::string> suite_identities(const std::string& suite) {
  if (suite == "structural") return {"first_structural", "lambda_relation"};
  if (suite == "curvature") return {"gooaffa", "pow1_trace", "R0ijk"};
  if (suite == "derivatives") return {"confusion", "eq16"};
  return {"first_structural", "lambda_relation", "confusion", "eq16",
          "gooaffa",          "pow1_trace",      "R0ijk"};
}

AnalysisResult run_analysis(const Scene& scene, const SamplePlan& plan,
                            const Tolerances& tol,
                            const std::optional<Expectations>& expect) {
  AnalysisResult r;
  r.scene = scene;
  r.plan = plan;
  r.tol = tol;
  r.expectations = expect;

  const std::size_t n = scene.dimension;
  const auto points = sample_points(plan, scene.domain, n);
  r.timelike = timelike_domain_check(scene, points);

  const bool flat_mode = scene.model_kappa && *scene.model_kappa == 0.0;

  std::vector<FrameSample> frames;
  std::vector<DSample> derivs;
  std::vector<BaseCurvatureSample> bases;
  std::vector<std::vector<double>> rhats;
  std::vector<std::vector<double>> ok_points;

  r.records.resize(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    PointRecord& rec = r.records[p];
    rec.point = points[p];
    try {
      FrameSample fs = adapt_frame(scene, points[p]);
      DSample ds = covariant_derivatives(fs);
      BaseCurvatureSample bc = base_curvature(fs);
      const RiemannSample rs = riemann(fs.conn);
      double riem = 0.0;
      for (double x : rs.R) riem = std::max(riem, std::fabs(x));
      if (flat_mode && riem >= kEpsFlatRiemann)
        throw ModeUnavailable("scene declares zero curvature but max |Riemann| = " +
                              fmt(riem) + " at " + fmt_point(points[p]));
      if (riem > r.max_riemann) r.max_riemann = riem;
      std::vector<double> rh = project_riemann(fs, rs);
      rec.kin = kinematic_invariants(fs);
      rec.ok = true;
      ++r.ok_count;
      frames.push_back(std::move(fs));
      derivs.push_back(std::move(ds));
      bases.push_back(std::move(bc));
      rhats.push_back(std::move(rh));
      ok_points.push_back(points[p]);
    } catch (const NumericalError& e) {
      rec.ok = false;
      rec.error = e.what();
    }
  }
  if (r.ok_count == 0) return r;

  r.identities.resize(7);
  for (std::size_t q = 0; q < frames.size(); ++q) {
    const FrameSample& fs = frames[q];
    check_first_structural(fs, r.identities[0]);
    check_lambda_relation(fs, r.identities[1]);
    check_confusion(fs, derivs[q], r.identities[2]);
    check_acceleration_evolution(fs, derivs[q], flat_mode ? nullptr : rhats[q].data(),
                                 r.identities[3]);
    check_gooaffa(fs, bases[q], rhats[q].data(), r.identities[4]);
    check_pow1_trace(fs, bases[q], rhats[q].data(), r.identities[5]);
    check_R0ijk(fs, derivs[q], r.identities[6]);
  }

  std::vector<KinematicInvariants> kin;
  for (const auto& rec : r.records)
    if (rec.ok) kin.push_back(rec.kin);

  const Verdict rigidity = rigidity_verdict(kin, ok_points, tol.verdict);
  const Verdict killing = killing_verdict(scene, ok_points, tol.verdict);
  double kappa_used = 0.0;
  const Verdict homog = homogeneity_verdict(scene, ok_points, tol.verdict, kappa_used);
  double min_vort = 0.0;
  const bool rot = rotational_everywhere(kin, tol.rotational, min_vort);

  r.verdicts = {rigidity, killing, homog};

  r.max_I0_K.assign(n, 0.0);
  for (const auto& ds : derivs)
    for (std::size_t i = 1; i < n; ++i)
      r.max_I0_K[i] = std::max(r.max_I0_K[i], std::fabs(ds.I0_K[i]));

  if (rigidity.pass) {
    r.isometry = isometry_via_criteria(frames, derivs, ok_points, rigidity, tol.verdict);
    r.has_isometry = true;
    r.verdicts.push_back(r.isometry.rfif);
    r.verdicts.push_back(r.isometry.finalc);
  } else {
    r.isometry_note = "rigidity failed; the isometry criteria presuppose a rigid flow";
  }

  r.theorem = theorem_conclusion(homog, kappa_used, scene.model_kappa.has_value(),
                                 rigidity, rot, min_vort, killing);

  r.identities[1].asserted = killing.pass;
  if (!killing.pass)
    r.identities[1].note = "the flow is not a Killing field; informational";
  const bool cc_rigid = scene.model_kappa.has_value() && homog.pass && rigidity.pass;
  r.identities[5].asserted = cc_rigid;
  r.identities[6].asserted = cc_rigid;
  if (!cc_rigid) {
    const std::string why =
        !scene.model_kappa ? "no curvature constant declared; informational"
        : !homog.pass      ? "declared curvature not confirmed; informational"
                           : "the flow is not rigid; informational";
    r.identities[5].note = why;
    r.identities[6].note = why;
  }

  for (const auto& id : r.identities)
    if (id.asserted && id.residual >= identity_tolerance(tol, id.name))
      r.identities_ok = false;

  if (expect) {
    auto add = [&](const char* what, bool expected, bool measured, double worst) {
      if (expected != measured)
        r.expectation_mismatches.push_back(
            std::string("expected ") + what + (expected ? "=true" : "=false") +
            ", measured " + (measured ? "true" : "false") + " (worst residual " +
            fmt(worst) + ")");
    };
    if (expect->rigid) add("rigid", *expect->rigid, rigidity.pass, rigidity.worst_residual);
    if (expect->killing)
      add("killing", *expect->killing, killing.pass, killing.worst_residual);
    if (expect->rotational) add("rotational", *expect->rotational, rot, min_vort);
  }

  return r;
}

bool analyze_ok(const AnalysisResult& r) {
  return r.ok_count > 0 && r.identities_ok && r.expectation_mismatches.empty();
}

bool verify_suite_ok(const AnalysisResult& r, const std::string& suite) {
  if (r.ok_count == 0) return false;
  for (const std::string& name : suite_identities(suite))
    for (const auto& id : r.identities)
      if (id.name == name && id.asserted && !identity_pass(r, id)) return false;
  if ((suite == "curvature" || suite == "all") && r.scene.model_kappa) {
    const Verdict* h = find_verdict(r, "homogeneity");
    if (!h || !h->pass) return false;
  }
  return true;
}

// ---- scene files ----

namespace {

const ordered_json& require(const ordered_json& j, const char* field) {
  if (!j.contains(field)) throw SchemaError(field, "missing");
  return j.at(field);
}

std::vector<std::string> string_list(const ordered_json& j, const char* field) {
  if (!j.is_array()) throw SchemaError(field, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw SchemaError(field, "expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<double> number_list(const ordered_json& j, const char* field) {
  if (!j.is_array()) throw SchemaError(field, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : j) {
    if (!e.is_number()) throw SchemaError(field, "expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

} // namespace

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("file", "cannot open '" + path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw SchemaError("json", e.what());
  }
  if (!j.is_object()) throw SchemaError("json", "top level must be an object");

  const auto& jdim = require(j, "dimension");
  if (!jdim.is_number_unsigned()) throw SchemaError("dimension", "expected a positive integer");
  const std::size_t n = jdim.get<std::size_t>();

  const auto coords = string_list(require(j, "coordinates"), "coordinates");

  const auto& jm = require(j, "metric");
  if (!jm.is_array()) throw SchemaError("metric", "expected an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : jm) rows.push_back(string_list(row, "metric"));

  const auto flow = string_list(require(j, "flow"), "flow");

  Params params;
  if (j.contains("parameters")) {
    const auto& jp = j.at("parameters");
    if (!jp.is_object()) throw SchemaError("parameters", "expected an object");
    for (const auto& [k, v] : jp.items()) {
      if (!v.is_number()) throw SchemaError("parameters", "'" + k + "' must be a number");
      params[k] = v.get<double>();
    }
  }

  std::optional<double> kappa;
  if (j.contains("kappa")) {
    if (!j.at("kappa").is_number()) throw SchemaError("kappa", "expected a number");
    kappa = j.at("kappa").get<double>();
  }

  const auto& jd = require(j, "domain");
  if (!jd.is_object()) throw SchemaError("domain", "expected an object with min and max");
  Box box;
  box.min = number_list(require(jd, "min"), "domain.min");
  box.max = number_list(require(jd, "max"), "domain.max");

  std::string name = "scene";
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw SchemaError("name", "expected a string");
    name = j.at("name").get<std::string>();
  } else {
    const auto slash = path.find_last_of('/');
    name = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  }

  return make_scene(n, name, coords, rows, flow, params, kappa, box);
}

// ---- rendering ----

namespace {

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["criterion"] = v.criterion;
  j["pass"] = v.pass;
  j["worst_residual"] = v.worst_residual;
  j["worst_point"] = v.worst_point;
  j["tolerance"] = v.tolerance;
  return j;
}

ordered_json identity_json(const AnalysisResult& r, const IdentityResult& id) {
  ordered_json j;
  j["name"] = id.name;
  if (!id.mode.empty()) j["mode"] = id.mode;
  j["asserted"] = id.asserted;
  if (!id.note.empty()) j["note"] = id.note;
  j["tolerance"] = identity_tolerance(r.tol, id.name);
  j["residual"] = id.residual;
  j["pass"] = identity_pass(r, id);
  j["worst_point"] = id.worst_point;
  j["worst_tuple"] = id.worst_tuple;
  j["worst_terms"] = id.worst_terms;
  j["scale"] = id.worst_scale;
  return j;
}

std::vector<const IdentityResult*> selected_identities(const AnalysisResult& r,
                                                       ReportKind kind,
                                                       const std::string& suite) {
  std::vector<std::string> names =
      suite_identities(kind == ReportKind::Verify ? suite : "all");
  std::vector<const IdentityResult*> out;
  for (const std::string& name : names)
    for (const auto& id : r.identities)
      if (id.name == name) out.push_back(&id);
  return out;
}

bool report_pass(const AnalysisResult& r, ReportKind kind, const std::string& suite) {
  switch (kind) {
  case ReportKind::Analyze: return analyze_ok(r);
  case ReportKind::Verify: return verify_suite_ok(r, suite);
  case ReportKind::Theorem: return r.theorem.conclusion == "theorem-instantiated";
  }
  return false;
}

std::vector<double> spatial_vector(const std::vector<double>& v, std::size_t n) {
  return std::vector<double>(v.begin() + 1, v.begin() + std::ptrdiff_t(n));
}

ordered_json spatial_matrix(const std::vector<double>& m, std::size_t n) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 1; i < n; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 1; j < n; ++j) row.push_back(m[ix2(n, i, j)]);
    rows.push_back(row);
  }
  return rows;
}

} // namespace

std::string render_json(const AnalysisResult& r, ReportKind kind,
                        const std::string& suite) {
  const std::size_t n = r.scene.dimension;
  ordered_json j;

  ordered_json& sc = j["scene"];
  sc["name"] = r.scene.name;
  sc["dimension"] = n;
  sc["coordinates"] = r.scene.coordinates;
  {
    ordered_json m = ordered_json::array();
    for (std::size_t mu = 0; mu < n; ++mu) {
      ordered_json row = ordered_json::array();
      for (std::size_t nu = 0; nu < n; ++nu)
        row.push_back(r.scene.metric_text[ix2(n, mu, nu)]);
      m.push_back(row);
    }
    sc["metric"] = m;
  }
  sc["flow"] = r.scene.flow_text;
  {
    ordered_json p = ordered_json::object();
    for (const auto& [k, v] : r.scene.parameters) p[k] = v;
    sc["parameters"] = p;
  }
  if (r.scene.model_kappa)
    sc["kappa"] = *r.scene.model_kappa;
  else
    sc["kappa"] = nullptr;
  sc["domain"]["min"] = r.scene.domain.min;
  sc["domain"]["max"] = r.scene.domain.max;

  {
    ordered_json c = ordered_json::array();
    for (const char* line : kConventionLines) c.push_back(line);
    c.push_back(std::string("rng: ") + r.plan.rng);
    j["conventions"] = c;
  }

  ordered_json& plan = j["plan"];
  plan["kind"] = r.plan.kind;
  plan["count"] = r.plan.count;
  plan["seed"] = r.plan.seed;
  plan["rng"] = r.plan.rng;

  ordered_json& tol = j["tolerances"];
  tol["identity"] = r.tol.identity;
  tol["verdict"] = r.tol.verdict;
  tol["rotational"] = r.tol.rotational;
  tol["lambda"] = r.tol.lambda;

  ordered_json& sum = j["summary"];
  sum["points"] = r.records.size();
  sum["usable"] = r.ok_count;
  sum["excluded"] = r.records.size() - r.ok_count;
  sum["causality_flagged"] = r.timelike.flagged.size();
  sum["max_riemann"] = r.max_riemann;

  {
    ordered_json pts = ordered_json::array();
    for (const auto& rec : r.records) {
      ordered_json p;
      p["point"] = rec.point;
      p["ok"] = rec.ok;
      if (!rec.ok) {
        p["error"] = rec.error;
      } else {
        p["lambda"] = rec.kin.lambda;
        p["K"] = spatial_vector(rec.kin.K, n);
        p["K_norm"] = rec.kin.K_norm;
        p["M"] = spatial_matrix(rec.kin.M, n);
        p["vorticity"] = spatial_matrix(rec.kin.vorticity, n);
        p["shear"] = spatial_matrix(rec.kin.shear, n);
        p["expansion"] = rec.kin.expansion;
        p["vorticity_magnitude"] = rec.kin.vorticity_magnitude;
        p["shear_magnitude"] = rec.kin.shear_magnitude;
        p["rigidity_residual"] = rec.kin.rigidity_residual;
        p["skipped"] = rec.kin.skipped;
      }
      pts.push_back(p);
    }
    j["points"] = pts;
  }

  {
    ordered_json c;
    c["flagged"] = r.timelike.flagged;
    c["vv"] = r.timelike.vv;
    j["causality"] = c;
  }

  {
    ordered_json ids = ordered_json::array();
    for (const IdentityResult* id : selected_identities(r, kind, suite))
      ids.push_back(identity_json(r, *id));
    j["identities"] = ids;
  }

  {
    ordered_json vs = ordered_json::array();
    for (const auto& v : r.verdicts) vs.push_back(verdict_json(v));
    j["verdicts"] = vs;
  }

  if (r.has_isometry) {
    ordered_json& iso = j["isometry"];
    iso["max_K_antisym"] = r.isometry.max_K_antisym;
    iso["max_K_dot"] = r.isometry.max_K_dot;
    iso["max_M_dot"] = r.isometry.max_M_dot;
    iso["max_I0_K"] = spatial_vector(r.max_I0_K, n);
  } else if (!r.isometry_note.empty()) {
    j["isometry"] = r.isometry_note;
  }

  if (kind == ReportKind::Theorem) {
    ordered_json& t = j["theorem"];
    t["homogeneity"] = verdict_json(r.theorem.homogeneity);
    t["kappa"] = r.theorem.kappa;
    t["kappa_declared"] = r.theorem.kappa_declared;
    t["rigidity"] = verdict_json(r.theorem.rigidity);
    t["rotational"] = r.theorem.rotational;
    t["min_vorticity"] = r.theorem.min_vorticity;
    t["killing"] = verdict_json(r.theorem.killing);
    t["conclusion"] = r.theorem.conclusion;
  }

  if (r.expectations) {
    ordered_json& e = j["expectations"];
    if (r.expectations->rigid) e["rigid"] = *r.expectations->rigid;
    if (r.expectations->killing) e["killing"] = *r.expectations->killing;
    if (r.expectations->rotational) e["rotational"] = *r.expectations->rotational;
    e["mismatches"] = r.expectation_mismatches;
  }

  j["result"] = report_pass(r, kind, suite) ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

std::string render_text(const AnalysisResult& r, ReportKind kind,
                        const std::string& suite) {
  const std::size_t n = r.scene.dimension;
  std::ostringstream out;
  const char* kindname = kind == ReportKind::Analyze ? "analyze"
                         : kind == ReportKind::Verify ? "verify"
                                                      : "theorem";
  out << "rigidflow " << kindname;
  if (kind == ReportKind::Verify) out << " suite=" << suite;
  out << "\n";

  out << "scene: " << r.scene.name << "  dimension " << n << "\n";
  out << "coordinates:";
  for (const auto& c : r.scene.coordinates) out << " " << c;
  out << "\n";
  for (std::size_t mu = 0; mu < n; ++mu) {
    out << "metric[" << mu << "]:";
    for (std::size_t nu = 0; nu < n; ++nu)
      out << (nu ? " | " : " ") << r.scene.metric_text[ix2(n, mu, nu)];
    out << "\n";
  }
  out << "flow:";
  for (std::size_t mu = 0; mu < n; ++mu)
    out << (mu ? " | " : " ") << r.scene.flow_text[mu];
  out << "\n";
  for (const auto& [k, v] : r.scene.parameters)
    out << "param " << k << " = " << fmt(v) << "\n";
  out << "kappa: " << (r.scene.model_kappa ? fmt(*r.scene.model_kappa) : "(none)")
      << "\n";
  for (std::size_t a = 0; a < n; ++a)
    out << "domain " << r.scene.coordinates[a] << ": [" << fmt(r.scene.domain.min[a])
        << ", " << fmt(r.scene.domain.max[a]) << "]\n";
  for (const char* line : kConventionLines) out << "convention: " << line << "\n";
  out << "convention: rng: " << r.plan.rng << "\n";
  out << "plan: " << r.plan.kind << ":" << r.plan.count << " seed " << r.plan.seed
      << "\n";
  out << "tolerances: identity " << fmt(r.tol.identity) << " verdict "
      << fmt(r.tol.verdict) << " rotational " << fmt(r.tol.rotational) << " lambda "
      << fmt(r.tol.lambda) << "\n";
  out << "sampled " << r.records.size() << ", usable " << r.ok_count << ", excluded "
      << (r.records.size() - r.ok_count) << ", causality-flagged "
      << r.timelike.flagged.size() << "\n";
  out << "max |Riemann| (coordinate components): " << fmt(r.max_riemann) << "\n";

  for (std::size_t idx : r.timelike.flagged) {
    out << "causality-flag point " << idx << " " << fmt_point(r.records[idx].point)
        << ": g(V,V) = " << fmt(r.timelike.vv[idx]) << "\n";
  }
  for (std::size_t p = 0; p < r.records.size(); ++p)
    if (!r.records[p].ok)
      out << "excluded point " << p << " " << fmt_point(r.records[p].point) << ": "
          << r.records[p].error << "\n";

  if (kind == ReportKind::Analyze) {
    for (std::size_t p = 0; p < r.records.size(); ++p) {
      const PointRecord& rec = r.records[p];
      if (!rec.ok) continue;
      out << "point " << p << " " << fmt_point(rec.point) << ": lambda "
          << fmt(rec.kin.lambda) << " K_norm " << fmt(rec.kin.K_norm) << " expansion "
          << fmt(rec.kin.expansion) << " vorticity " << fmt(rec.kin.vorticity_magnitude)
          << " shear " << fmt(rec.kin.shear_magnitude) << " rigidity "
          << fmt(rec.kin.rigidity_residual) << " skipped (";
      for (std::size_t i = 0; i < rec.kin.skipped.size(); ++i)
        out << (i ? " " : "") << rec.kin.skipped[i];
      out << ")\n";
    }
  }

  for (const IdentityResult* id : selected_identities(r, kind, suite)) {
    out << "identity " << id->name;
    if (!id->mode.empty()) out << " [" << id->mode << "]";
    out << ": residual " << fmt(id->residual) << " tol "
        << fmt(identity_tolerance(r.tol, id->name)) << " "
        << (identity_pass(r, *id) ? "pass" : "FAIL") << " "
        << (id->asserted ? "asserted" : "informational");
    if (!id->note.empty()) out << " (" << id->note << ")";
    if (!id->worst_point.empty()) {
      out << " worst at " << fmt_point(id->worst_point) << " tuple (";
      for (std::size_t i = 0; i < id->worst_tuple.size(); ++i)
        out << (i ? " " : "") << id->worst_tuple[i];
      out << ") terms (";
      for (std::size_t i = 0; i < id->worst_terms.size(); ++i)
        out << (i ? " " : "") << fmt(id->worst_terms[i]);
      out << ") scale " << fmt(id->worst_scale);
    }
    out << "\n";
  }

  for (const auto& v : r.verdicts) {
    out << "verdict " << v.criterion << ": " << (v.pass ? "pass" : "FAIL") << " worst "
        << fmt(v.worst_residual) << " at " << fmt_point(v.worst_point) << " tol "
        << fmt(v.tolerance) << "\n";
  }

  if (r.has_isometry) {
    out << "isometry components: max |K_[i;j]| " << fmt(r.isometry.max_K_antisym)
        << " max |Kdot| " << fmt(r.isometry.max_K_dot) << " max |Mdot| "
        << fmt(r.isometry.max_M_dot) << " max |I_0(K)|";
    for (std::size_t i = 1; i < r.max_I0_K.size(); ++i)
      out << " " << fmt(r.max_I0_K[i]);
    out << "\n";
  } else if (!r.isometry_note.empty()) {
    out << "isometry: " << r.isometry_note << "\n";
  }

  if (kind == ReportKind::Theorem) {
    const TheoremReport& t = r.theorem;
    out << "hypothesis homogeneity: " << (t.homogeneity.pass ? "pass" : "FAIL")
        << " kappa " << fmt(t.kappa) << (t.kappa_declared ? " (declared)" : " (fitted)")
        << " worst defect " << fmt(t.homogeneity.worst_residual) << "\n";
    out << "hypothesis rigidity: " << (t.rigidity.pass ? "pass" : "FAIL") << " worst "
        << fmt(t.rigidity.worst_residual) << "\n";
    out << "hypothesis rotation: " << (t.rotational ? "yes" : "no")
        << " min vorticity " << fmt(t.min_vorticity) << "\n";
    out << "killing-direct: " << (t.killing.pass ? "pass" : "FAIL") << " worst "
        << fmt(t.killing.worst_residual) << "\n";
    out << "conclusion: " << t.conclusion << "\n";
  }

  if (r.expectations) {
    if (r.expectation_mismatches.empty()) {
      out << "expectations: consistent\n";
    } else {
      for (const auto& m : r.expectation_mismatches)
        out << "expectation mismatch: " << m << "\n";
    }
  }

  out << "result: " << (report_pass(r, kind, suite) ? "PASS" : "FAIL") << "\n";
  return out.str();
}

} // namespace rigidflow
