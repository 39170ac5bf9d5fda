// Acceptance gate. Runs nine scripted criteria against the library and
// prints one PASS/FAIL line per criterion; the exit status is the number
// of failed criteria. Every expected value here is frozen: closed forms,
// catalog behavior, and the identity tolerances the project promises.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "rigidflow/frame.hpp"
#include "rigidflow/geometry.hpp"
#include "rigidflow/kinematics.hpp"
#include "rigidflow/models.hpp"
#include "rigidflow/report.hpp"

using namespace rigidflow;

namespace {

int g_failures = 0;

void report(int idx, const char* label, bool ok, const std::string& detail) {
  std::printf("criterion %d (%s): %s%s%s\n", idx, label, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : "  ", detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

const IdentityResult* find_id(const AnalysisResult& r, const char* name) {
  for (const auto& id : r.identities)
    if (id.name == name) return &id;
  return nullptr;
}

const Verdict* find_verdict(const AnalysisResult& r, const char* name) {
  for (const auto& v : r.verdicts)
    if (v.criterion == name) return &v;
  return nullptr;
}

struct CorpusRun {
  std::string label;
  bool cc = false;   // constant-curvature chart (declared kappa)
  bool flat = false; // minkowski background
  bool rotating_cc = false;
  AnalysisResult result;
};

// ---- criteria 1 and 2: identity corpus and theorem instances ------------

std::vector<CorpusRun> run_corpus(double& elapsed_s) {
  struct ModelSpec {
    const char* model;
    std::size_t dim;
    Params mp;
    bool cc, flat;
  };
  std::vector<ModelSpec> models;
  for (std::size_t n : {3, 4, 5, 6})
    models.push_back({"minkowski", n, {}, true, true});
  for (double kappa : {1.0, -1.0})
    for (std::size_t n : {4, 5})
      models.push_back({"constant_curvature", n, {{"kappa", kappa}}, true, false});
  models.push_back({"einstein_static", 4, {}, false, false});

  struct FlowSpec {
    const char* flow;
    Params fp;
  };
  const FlowSpec flows[] = {
      {"static", {}},
      {"rotating", {{"Omega", 0.3}}},
      {"rotating", {{"Omega", 0.5}}},
  };

  std::vector<CorpusRun> runs;
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t seed = 1000;
  for (const ModelSpec& m : models)
    for (const FlowSpec& f : flows) {
      Scene s = build_scene(m.model, m.dim, m.mp, f.flow, f.fp);
      SamplePlan plan = parse_points_spec("random:50", seed);
      seed += 7;
      CorpusRun run;
      run.label = s.name + " n=" + std::to_string(m.dim);
      if (f.fp.count("Omega"))
        run.label += " Omega=" + std::to_string(f.fp.at("Omega")).substr(0, 3);
      run.cc = m.cc;
      run.flat = m.flat;
      run.rotating_cc = m.cc && !m.flat && std::strcmp(f.flow, "rotating") == 0;
      run.result = run_analysis(s, plan, Tolerances{}, std::nullopt);
      runs.push_back(std::move(run));
    }
  elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return runs;
}

void criterion_corpus(const std::vector<CorpusRun>& runs, double elapsed_s) {
  bool ok = true;
  std::string detail;
  double worst = 0.0;
  for (const CorpusRun& run : runs) {
    const AnalysisResult& r = run.result;
    auto demand = [&](const char* name, bool flat_mode_expected = false) {
      const IdentityResult* id = find_id(r, name);
      if (!id || r.ok_count == 0) {
        ok = false;
        detail = run.label + ": " + name + " missing";
        return;
      }
      if (id->residual >= 1e-7) {
        ok = false;
        detail = run.label + ": " + name + " residual " + fmt("%.3e", id->residual);
      }
      if (flat_mode_expected && id->mode != "flat") {
        ok = false;
        detail = run.label + ": expected flat evolution mode";
      }
      worst = std::max(worst, id->residual);
    };
    demand("first_structural");
    demand("confusion");
    demand("gooaffa");
    demand("eq16", run.flat);
    if (run.cc) {
      demand("pow1_trace");
      demand("R0ijk");
    }
  }
  if (elapsed_s >= 60.0) {
    ok = false;
    detail = fmt("corpus took %.1f s, budget 60 s", elapsed_s);
  }
  if (ok)
    detail = fmt("27 scenes x 50 points, worst asserted residual %.3e, %.1f s",
                 worst, elapsed_s);
  report(1, "identity corpus under 1e-7", ok, detail);
}

void criterion_theorem(const std::vector<CorpusRun>& runs) {
  bool ok = true;
  std::string detail;
  std::size_t instances = 0;
  for (const CorpusRun& run : runs) {
    const std::string& c = run.result.theorem.conclusion;
    if (c == "counterexample-candidate") {
      ok = false;
      detail = run.label + ": counterexample-candidate reported";
    }
    if (run.rotating_cc) {
      ++instances;
      if (c != "theorem-instantiated") {
        ok = false;
        detail = run.label + ": conclusion " + c;
      }
    }
  }
  if (ok)
    detail = std::to_string(instances) +
             " rotating constant-curvature scenes instantiated, no candidate "
             "counterexamples anywhere";
  report(2, "rigid rotation instantiates the theorem", ok, detail);
}

// ---- criterion 3: catalog isometries are rigid ---------------------------

void criterion_killing_rigid() {
  struct Combo {
    const char* model;
    std::size_t dim;
    Params mp;
    const char* flow;
    Params fp;
  };
  const Combo combos[] = {
      {"minkowski", 4, {}, "static", {}},
      {"minkowski", 4, {}, "rotating", {{"Omega", 0.5}}},
      {"de_sitter", 4, {}, "static", {}},
      {"de_sitter", 4, {}, "rotating", {{"Omega", 0.5}}},
      {"anti_de_sitter", 4, {}, "static", {}},
      {"anti_de_sitter", 4, {}, "rotating", {{"Omega", 0.5}}},
      {"einstein_static", 4, {}, "static", {}},
      {"einstein_static", 4, {}, "rotating", {{"Omega", 0.5}}},
      {"minkowski", 3, {}, "fermi_rigid", {{"a1", 0.0}}},
      {"minkowski", 4, {}, "perturbed_rotating", {{"eps", 0.0}}},
  };
  bool ok = true;
  std::string detail;
  std::size_t checked = 0;
  for (const Combo& c : combos) {
    Scene s = build_scene(c.model, c.dim, c.mp, c.flow, c.fp);
    Expectations e = expected_verdicts(c.model, c.flow, s.parameters);
    if (!e.killing || !*e.killing) {
      ok = false;
      detail = s.name + ": combo not predicted killing";
      continue;
    }
    SamplePlan plan = parse_points_spec("random:20", 2000 + checked);
    AnalysisResult r = run_analysis(s, plan, Tolerances{}, e);
    const Verdict* rigid = find_verdict(r, "firstprop");
    const Verdict* killing = find_verdict(r, "killing-direct");
    if (!killing || !killing->pass) {
      ok = false;
      detail = s.name + ": flow is not the isometry the catalog promised";
    }
    if (!rigid || !rigid->pass) {
      ok = false;
      detail = s.name + ": rigidity residual " + fmt("%.3e", rigid ? rigid->worst_residual : -1.0);
    }
    ++checked;
  }
  if (ok) detail = std::to_string(checked) + " isometric flows, all rigid at 1e-6";
  report(3, "every catalog isometry is rigid", ok, detail);
}

// ---- criterion 4: rigid non-isometry -------------------------------------

void criterion_fermi() {
  Scene s = build_scene("minkowski", 3, {}, "fermi_rigid", {{"a0", 0.3}, {"a1", 0.1}});
  SamplePlan plan = parse_points_spec("random:20", 404);
  AnalysisResult r = run_analysis(s, plan, Tolerances{},
                                  expected_verdicts("minkowski", "fermi_rigid",
                                                    s.parameters));
  bool ok = true;
  std::string detail;
  const Verdict* rigid = find_verdict(r, "firstprop");
  const Verdict* killing = find_verdict(r, "killing-direct");
  const Verdict* rfif = find_verdict(r, "rfif");
  const Verdict* finalc = find_verdict(r, "finalc");
  if (!rigid || !rigid->pass) {
    ok = false;
    detail = "oscillating acceleration should still be rigid";
  } else if (r.theorem.rotational) {
    ok = false;
    detail = "flow misread as rotational";
  } else if (!killing || killing->pass) {
    ok = false;
    detail = "killing check passed but the geometry is time dependent";
  } else if (!r.has_isometry || !rfif || !finalc) {
    ok = false;
    detail = "isometry criteria missing despite rigidity";
  } else if (rfif->pass || finalc->pass) {
    ok = false;
    detail = "derivative criteria passed for a non-isometry";
  } else if (r.isometry.max_K_dot <= 1e-6) {
    ok = false;
    detail = "failure not attributed to the acceleration rate";
  } else if (r.isometry.max_K_antisym > 1e-9 || r.isometry.max_M_dot > 1e-9) {
    ok = false;
    detail = "failure leaked into the wrong component";
  } else if (r.max_riemann >= 1e-9) {
    ok = false;
    detail = fmt("chart is not flat: max |Riemann| %.3e", r.max_riemann);
  }
  if (ok)
    detail = fmt("rigid, non-rotating, both isometry criteria fail via "
                 "max |Kdot| = %.3e", r.isometry.max_K_dot);
  report(4, "oscillating acceleration: rigid but no isometry", ok, detail);
}

// ---- criterion 5: non-rigid flows are caught -----------------------------

void criterion_non_rigid() {
  bool ok = true;
  std::string detail;

  Scene milne = build_scene("minkowski", 3, {}, "milne", {});
  SamplePlan plan = parse_points_spec("random:20", 505);
  AnalysisResult r = run_analysis(milne, plan, Tolerances{}, std::nullopt);
  const Verdict* rigid = find_verdict(r, "firstprop");
  if (!rigid || rigid->pass) {
    ok = false;
    detail = "expanding flow passed rigidity";
  }
  std::size_t usable = 0;
  for (const PointRecord& rec : r.records) {
    if (!rec.ok) continue;
    ++usable;
    const double tau = std::sqrt(rec.point[0] * rec.point[0] -
                                 rec.point[1] * rec.point[1]);
    if (tau < 1.0 || tau > 2.0) {
      ok = false;
      detail = fmt("sample tau %.3f left the [1,2] window", tau);
      continue;
    }
    if (std::fabs(rec.kin.rigidity_residual - 1.0 / tau) > 1e-6) {
      ok = false;
      detail = fmt("residual %.8f vs 1/tau %.8f", rec.kin.rigidity_residual, 1.0 / tau);
    }
  }
  if (usable == 0) {
    ok = false;
    detail = "no usable expanding-flow points";
  }

  Scene pert = build_scene("minkowski", 4, {}, "perturbed_rotating",
                           {{"Omega", 0.5}, {"eps", 0.1}});
  AnalysisResult rp = run_analysis(pert, parse_points_spec("random:20", 606),
                                   Tolerances{}, std::nullopt);
  const Verdict* prigid = find_verdict(rp, "firstprop");
  if (!prigid || prigid->pass) {
    ok = false;
    detail = "sheared rotation passed rigidity";
  }
  double min_shear = 1e300;
  for (const PointRecord& rec : rp.records)
    if (rec.ok) min_shear = std::min(min_shear, rec.kin.shear_magnitude);
  if (min_shear <= 1e-3) {
    ok = false;
    detail = fmt("weakest shear %.3e not above 1e-3", min_shear);
  }
  if (ok)
    detail = fmt("expansion matches 1/tau to 1e-6; weakest shear %.3e", min_shear);
  report(5, "non-rigid flows are measured, not just flagged", ok, detail);
}

// ---- criterion 6: derivative operator against finite differences ---------

void criterion_derivative_fd() {
  Scene s = build_scene("minkowski", 4, {}, "rotating", {{"Omega", 0.5}});
  const std::size_t n = 4;
  const double h = 1e-4;
  const auto pts = sample_points(parse_points_spec("random:20", 707), s.domain, n);
  bool ok = true;
  std::string detail;
  double worst = 0.0;
  for (const auto& pt : pts) {
    FrameSample fs = adapt_frame(s, pt);
    DSample ds = covariant_derivatives(fs);
    for (std::size_t j = 0; j < n && ok; ++j) {
      std::vector<double> plus = pt, minus = pt;
      for (std::size_t al = 0; al < n; ++al) {
        plus[al] += h * fs.I[ix2(n, j, al)];
        minus[al] -= h * fs.I[ix2(n, j, al)];
      }
      FrameSample fp = adapt_frame(s, plus);
      FrameSample fm = adapt_frame(s, minus);
      auto check = [&](double got, double fd, const char* what) {
        const double err = std::fabs(got - fd) / (1.0 + std::fabs(got));
        worst = std::max(worst, err);
        if (err > 1e-4) {
          ok = false;
          detail = std::string(what) + fmt(" mismatch %.3e (analytic %.6f)", err, got);
        }
      };
      for (std::size_t i = 1; i < n; ++i) {
        const double dir = (fp.K(i) - fm.K(i)) / (2 * h);
        if (j == 0) {
          double fd = dir;
          for (std::size_t k = 1; k < n; ++k)
            fd -= fs.K(k) * (fs.B(k, i) - fs.M(k, i));
          check(ds.K_dot[i], fd, "Kdot");
        } else {
          double fd = dir;
          for (std::size_t k = 1; k < n; ++k)
            fd -= fs.K(k) * fs.A(k, i, j);
          check(ds.K_D[ix2(n, i, j)], fd, "K_D");
        }
        for (std::size_t jj = 1; jj < n; ++jj) {
          const double dirM = (fp.M(i, jj) - fm.M(i, jj)) / (2 * h);
          if (j == 0) {
            double fd = dirM;
            for (std::size_t l = 1; l < n; ++l) {
              fd -= fs.M(l, jj) * (fs.B(l, i) - fs.M(l, i));
              fd -= fs.M(i, l) * (fs.B(l, jj) - fs.M(l, jj));
            }
            check(ds.M_dot[ix2(n, i, jj)], fd, "Mdot");
          } else {
            double fd = dirM;
            for (std::size_t l = 1; l < n; ++l) {
              fd -= fs.M(l, jj) * fs.A(l, i, j);
              fd -= fs.M(i, l) * fs.A(l, jj, j);
            }
            check(ds.M_D[ix3(n, i, jj, j)], fd, "M_D");
          }
        }
      }
    }
    if (!ok) break;
  }
  if (ok)
    detail = fmt("20 points, worst relative deviation %.3e at step %.0e", worst, h);
  report(6, "derivative operator matches finite differences", ok, detail);
}

// ---- criterion 7: frozen anchor invariants -------------------------------

void criterion_anchor() {
  Scene s = build_scene("minkowski", 4, {}, "rotating", {{"Omega", 0.5}});
  FrameSample fs = adapt_frame(s, {0.0, 1.0, 0.0, 0.0});
  KinematicInvariants kin = kinematic_invariants(fs);
  bool ok = true;
  std::string detail;
  if (std::fabs(kin.lambda - 0.8660254037844386) > 1e-7) {
    ok = false;
    detail = fmt("lambda %.10f", kin.lambda);
  } else if (std::fabs(kin.K_norm - 1.0 / 3.0) > 1e-7) {
    ok = false;
    detail = fmt("|K| %.10f", kin.K_norm);
  } else if (std::fabs(kin.vorticity_magnitude - 2.0 / 3.0) > 1e-7) {
    ok = false;
    detail = fmt("vorticity %.10f", kin.vorticity_magnitude);
  }
  if (ok)
    detail = fmt("lambda %.10f, |K| = 1/3, vorticity = 2/3 within 1e-7", kin.lambda);
  report(7, "anchor point invariants", ok, detail);
}

// ---- criterion 8: causality flags match the closed-form boundary ---------

void criterion_causality() {
  const double Omega = 0.9;
  Scene s = build_scene("minkowski", 4, {}, "rotating", {{"Omega", Omega}});
  const auto pts = sample_points(parse_points_spec("random:200", 808), s.domain, 4);
  TimelikeScan scan = timelike_domain_check(s, pts);
  std::vector<std::size_t> expect;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    const double rho2 = pts[p][1] * pts[p][1] + pts[p][2] * pts[p][2];
    if (Omega * Omega * rho2 >= 1.0 - kEpsTimelike) expect.push_back(p);
  }
  bool ok = scan.flagged == expect;
  std::string detail;
  if (ok)
    detail = std::to_string(expect.size()) +
             " of 200 points flagged, matching Omega^2 rho^2 >= 1 exactly";
  else
    detail = "flag sets differ: got " + std::to_string(scan.flagged.size()) +
             ", expected " + std::to_string(expect.size());
  report(8, "causality flags are exact", ok, detail);
}

// ---- criterion 9: reports are byte deterministic --------------------------

void criterion_determinism() {
  auto once = []() {
    Scene s = build_scene("de_sitter", 4, {}, "rotating", {{"Omega", 0.3}});
    SamplePlan plan = parse_points_spec("random:10", 909);
    AnalysisResult r = run_analysis(s, plan, Tolerances{},
                                    expected_verdicts("de_sitter", "rotating",
                                                      s.parameters));
    return render_text(r, ReportKind::Analyze, "all") +
           render_json(r, ReportKind::Analyze, "all") +
           render_text(r, ReportKind::Theorem, "all") +
           render_json(r, ReportKind::Verify, "all");
  };
  const std::string a = once();
  const std::string b = once();
  const bool ok = a == b;
  report(9, "reports are byte deterministic", ok,
         ok ? std::to_string(a.size()) + " bytes reproduced exactly"
            : "renders differ between identical runs");
}

} // namespace

int main() {
  std::printf("acceptance gate\n");

  double corpus_s = 0.0;
  std::vector<CorpusRun> runs = run_corpus(corpus_s);
  criterion_corpus(runs, corpus_s);
  criterion_theorem(runs);
  criterion_killing_rigid();
  criterion_fermi();
  criterion_non_rigid();
  criterion_derivative_fd();
  criterion_anchor();
  criterion_causality();
  criterion_determinism();

  std::printf("%d of 9 criteria failed\n", g_failures);
  return g_failures;
}
