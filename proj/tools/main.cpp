// rigidflow command line tool.
//
//   analyze  - sample a scene, report kinematic invariants and verdicts
//   verify   - run an identity suite and report worst residuals
//   theorem  - evaluate the rigidity theorem hypotheses and conclusion
//   models   - list the built-in metric and flow catalog
//
// Exit status: 0 pass, 1 a verdict or asserted identity failed, 2 bad
// usage or scene description, 3 numerical failure at scene level.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigidflow/errors.hpp"
#include "rigidflow/models.hpp"
#include "rigidflow/report.hpp"

using namespace rigidflow;

namespace {

struct Options {
  std::string scene_path;
  std::string model;
  std::string flow = "static";
  std::size_t dim = 4;
  std::vector<std::string> model_params;
  std::vector<std::string> flow_params;
  std::string points = "random:20";
  std::uint64_t seed = 0;
  double tol = 0.0; // 0 means "keep the default for this command"
  std::string format = "text";
  std::string suite = "all";
};

void add_common(CLI::App* sub, Options& o, bool with_suite) {
  auto* sc = sub->add_option("--scene", o.scene_path, "scene description file (JSON)");
  auto* mo = sub->add_option("--model", o.model, "built-in metric name (see `models`)");
  auto* di = sub->add_option("--dim", o.dim, "spacetime dimension for --model")
                 ->default_val(4);
  auto* pa = sub->add_option("--param", o.model_params, "metric parameter, name=value");
  auto* fl = sub->add_option("--flow", o.flow, "built-in flow name for --model")
                 ->default_val("static");
  auto* fp = sub->add_option("--flow-param", o.flow_params, "flow parameter, name=value");
  sc->excludes(mo)->excludes(di)->excludes(pa)->excludes(fl)->excludes(fp);
  sub->add_option("--points", o.points, "sample plan, random:N or grid:R")
      ->default_val("random:20");
  sub->add_option("--seed", o.seed, "random sample seed")->default_val(0);
  sub->add_option("--tol", o.tol,
                  with_suite ? "identity residual tolerance"
                             : "verdict residual tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "report format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  if (with_suite)
    sub->add_option("--suite", o.suite, "identity suite to assert")
        ->default_val("all")
        ->check(CLI::IsMember({"all", "structural", "curvature", "derivatives"}));
}

Params parse_kv(const std::vector<std::string>& specs, const char* flag) {
  Params out;
  for (const std::string& s : specs) {
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw SchemaError(flag, "expects name=value, got '" + s + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw SchemaError(flag, "bad numeric value in '" + s + "'");
    }
    if (used != s.size() - eq - 1)
      throw SchemaError(flag, "bad numeric value in '" + s + "'");
    out[s.substr(0, eq)] = v;
  }
  return out;
}

int run_report(ReportKind kind, const Options& o) {
  if (o.scene_path.empty() == o.model.empty()) {
    std::fprintf(stderr, "error: exactly one of --scene or --model is required\n");
    return 2;
  }

  Scene scene = o.scene_path.empty()
                    ? build_scene(o.model, o.dim, parse_kv(o.model_params, "--param"),
                                  o.flow, parse_kv(o.flow_params, "--flow-param"))
                    : load_scene(o.scene_path);

  std::optional<Expectations> expect;
  if (!o.model.empty())
    expect = expected_verdicts(o.model, o.flow, scene.parameters);

  SamplePlan plan = parse_points_spec(o.points, o.seed);
  Tolerances tol;
  if (o.tol > 0.0) {
    if (kind == ReportKind::Verify)
      tol.identity = o.tol;
    else
      tol.verdict = o.tol;
  }

  AnalysisResult r = run_analysis(scene, plan, tol, expect);
  const std::string out = o.format == "json" ? render_json(r, kind, o.suite)
                                             : render_text(r, kind, o.suite);
  std::fwrite(out.data(), 1, out.size(), stdout);

  if (r.ok_count == 0) {
    std::fprintf(stderr, "error: no sample point was usable\n");
    return 3;
  }
  bool pass = false;
  switch (kind) {
  case ReportKind::Analyze: pass = analyze_ok(r); break;
  case ReportKind::Verify: pass = verify_suite_ok(r, o.suite); break;
  case ReportKind::Theorem: pass = r.theorem.conclusion == "theorem-instantiated"; break;
  }
  return pass ? 0 : 1;
}

std::string format_default(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

int run_models(const std::string& format) {
  const std::vector<CatalogEntry>& cat = catalog();
  if (format == "json") {
    nlohmann::ordered_json root;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const CatalogEntry& e : cat) {
      nlohmann::ordered_json j;
      j["name"] = e.name;
      j["kind"] = e.kind;
      j["summary"] = e.summary;
      nlohmann::ordered_json ps = nlohmann::ordered_json::array();
      for (const ParamSpec& p : e.params) {
        nlohmann::ordered_json pj;
        pj["name"] = p.name;
        pj["default"] = p.value;
        pj["meaning"] = p.meaning;
        ps.push_back(pj);
      }
      j["params"] = ps;
      if (!e.restriction.empty()) j["restriction"] = e.restriction;
      list.push_back(j);
    }
    root["models"] = list;
    const std::string out = root.dump(2) + "\n";
    std::fwrite(out.data(), 1, out.size(), stdout);
    return 0;
  }
  for (const char* kind : {"metric", "flow"}) {
    std::printf("%ss:\n", kind);
    for (const CatalogEntry& e : cat) {
      if (e.kind != kind) continue;
      std::printf("  %-20s %s\n", e.name.c_str(), e.summary.c_str());
      for (const ParamSpec& p : e.params)
        std::printf("      %s=%s  %s\n", p.name.c_str(),
                    format_default(p.value).c_str(), p.meaning.c_str());
      if (!e.restriction.empty())
        std::printf("      note: %s\n", e.restriction.c_str());
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"adapted-frame analysis of timelike flows on pseudo-Riemannian "
               "metrics"};
  app.require_subcommand(1);

  Options o;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "kinematic invariants, verdicts, and identity residuals");
  add_common(analyze, o, false);
  CLI::App* verify = app.add_subcommand(
      "verify", "assert an identity suite over the sample set");
  add_common(verify, o, true);
  CLI::App* theorem = app.add_subcommand(
      "theorem", "check rigidity theorem hypotheses and conclusion");
  add_common(theorem, o, false);
  std::string models_format = "text";
  CLI::App* models = app.add_subcommand("models", "list built-in metrics and flows");
  models->add_option("--format", models_format, "listing format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (models->parsed()) return run_models(models_format);
    if (analyze->parsed()) return run_report(ReportKind::Analyze, o);
    if (verify->parsed()) return run_report(ReportKind::Verify, o);
    return run_report(ReportKind::Theorem, o);
  } catch (const SyntaxError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const UnknownSymbol& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const UnknownModel& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ParamOutOfRange& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const SchemaError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
