#include "rigidflow/models.hpp"

#include <cmath>
#include <string>

#include "rigidflow/errors.hpp"

namespace rigidflow {

namespace {

std::string coord(std::size_t i) { return i == 0 ? "t" : "x" + std::to_string(i); }

std::vector<std::string> coords(std::size_t n) {
  std::vector<std::string> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = coord(i);
  return c;
}

std::string rho2(std::size_t n) {
  std::string s;
  for (std::size_t i = 1; i < n; ++i) {
    if (!s.empty()) s += "+";
    s += coord(i) + "^2";
  }
  return s;
}

Params merge_params(const CatalogEntry& entry, const Params& given) {
  Params out;
  for (const auto& p : entry.params) out[p.name] = p.value;
  for (const auto& [k, v] : given) {
    if (!out.count(k))
      throw ParamOutOfRange(k, "'" + entry.name + "' takes no such parameter");
    out[k] = v;
  }
  return out;
}

const CatalogEntry& find_entry(const std::string& name, const std::string& kind) {
  for (const auto& e : catalog())
    if (e.name == name && e.kind == kind) return e;
  throw UnknownModel(name);
}

std::size_t plane_index(const Params& p, const std::string& key, std::size_t n) {
  const double v = p.at(key);
  if (v != std::floor(v) || v < 1.0 || v >= double(n))
    throw ParamOutOfRange(key, "must be a spatial coordinate index in [1, " +
                                   std::to_string(n - 1) + "]");
  return std::size_t(v);
}

std::vector<std::vector<std::string>> diag_metric(std::size_t n,
                                                  const std::string& g00,
                                                  const std::string& gii) {
  std::vector<std::vector<std::string>> rows(n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    rows[mu].assign(n - mu, "0");
    rows[mu][0] = mu == 0 ? g00 : gii;
  }
  return rows;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"minkowski", "metric", "flat metric diag(-1, 1, ..., 1)", {}, ""},
      {"constant_curvature",
       "metric",
       "static chart of the curvature-kappa model space, valid while "
       "kappa*rho^2 < 1",
       {{"kappa", 1.0, "sectional curvature"}},
       ""},
      {"de_sitter", "metric", "constant_curvature with kappa fixed to +1", {}, ""},
      {"anti_de_sitter", "metric", "constant_curvature with kappa fixed to -1", {}, ""},
      {"einstein_static",
       "metric",
       "product of a static time line with a round unit sphere "
       "(stereographic spatial chart)",
       {},
       ""},
      {"fermi_rigid",
       "metric",
       "flat metric in the comoving chart of an observer with proper "
       "acceleration a0 + a1*sin(t)",
       {{"a0", 0.3, "constant acceleration part"},
        {"a1", 0.1, "oscillating acceleration amplitude"}},
       ""},
      {"static", "flow", "coordinate time translation", {}, ""},
      {"rotating",
       "flow",
       "time translation plus rotation with angular velocity Omega in the "
       "(x_a, x_b) plane",
       {{"Omega", 0.5, "angular velocity"},
        {"plane_a", 1.0, "first plane coordinate index"},
        {"plane_b", 2.0, "second plane coordinate index"}},
       ""},
      {"perturbed_rotating",
       "flow",
       "rotating in the (x1, x2) plane plus a shearing perturbation "
       "eps*x1^2 along x2",
       {{"Omega", 0.5, "angular velocity"}, {"eps", 0.1, "perturbation strength"}},
       ""},
      {"milne",
       "flow",
       "radial expansion t d_t + x1 d_x1 inside the t > x1 wedge",
       {},
       "minkowski background only"},
      {"fermi_rigid",
       "flow",
       "time translation seen by an accelerated observer; replaces the "
       "metric with the fermi_rigid chart",
       {{"a0", 0.3, "constant acceleration part"},
        {"a1", 0.1, "oscillating acceleration amplitude"}},
       "minkowski background only"},
  };
  return entries;
}

Scene build_scene(const std::string& model, std::size_t dim, const Params& model_params,
                  const std::string& flow, const Params& flow_params) {
  const std::size_t n = dim;
  if (n < 2) throw ParamOutOfRange("dim", "needs at least 2 coordinates");

  const CatalogEntry& fentry = find_entry(flow, "flow");
  Params fp = merge_params(fentry, flow_params);

  // the fermi_rigid flow is sugar for its own chart with a static flow
  if (flow == "fermi_rigid") {
    if (model != "minkowski")
      throw ParamOutOfRange("flow", "fermi_rigid flow requires the minkowski "
                                    "background");
    if (!model_params.empty())
      throw ParamOutOfRange("model", "minkowski takes no parameters");
    return build_scene("fermi_rigid", dim, fp, "static", {});
  }
  if (flow == "milne" && model != "minkowski")
    throw ParamOutOfRange("flow", "milne flow requires the minkowski background");

  const CatalogEntry& mentry = find_entry(model, "metric");
  Params mp = merge_params(mentry, model_params);

  std::string model_name = model;
  std::optional<double> model_kappa;
  std::vector<std::vector<std::string>> rows;
  Box box;
  box.min.assign(n, -1.0);
  box.max.assign(n, 1.0);

  if (model == "minkowski") {
    rows = diag_metric(n, "-1", "1");
    model_kappa = 0.0;
  } else if (model == "constant_curvature" || model == "de_sitter" ||
             model == "anti_de_sitter") {
    double kappa = 1.0;
    if (model == "constant_curvature") {
      kappa = mp.at("kappa");
    } else {
      kappa = model == "de_sitter" ? 1.0 : -1.0;
      mp["kappa"] = kappa;
    }
    for (std::size_t i = 1; i < n; ++i) {
      box.min[i] = 0.15;
      box.max[i] = 0.4;
    }
    double rho2_max = 0.0;
    for (std::size_t i = 1; i < n; ++i)
      rho2_max += std::max(box.min[i] * box.min[i], box.max[i] * box.max[i]);
    if (kappa * rho2_max >= 1.0)
      throw ParamOutOfRange("kappa", "kappa*rho^2 reaches 1 inside the sample "
                                     "domain; the chart degenerates there");
    const std::string den = "1-kappa*(" + rho2(n) + ")";
    rows.resize(n);
    rows[0].assign(n, "0");
    rows[0][0] = "-(" + den + ")";
    for (std::size_t i = 1; i < n; ++i) {
      rows[i].assign(n - i, "0");
      rows[i][0] = "1+kappa*" + coord(i) + "^2/(" + den + ")";
      for (std::size_t j = i + 1; j < n; ++j)
        rows[i][j - i] = "kappa*" + coord(i) + "*" + coord(j) + "/(" + den + ")";
    }
    model_kappa = kappa;
  } else if (model == "einstein_static") {
    rows = diag_metric(n, "-1", "4/(1+" + rho2(n) + ")^2");
    for (std::size_t i = 1; i < n; ++i) {
      box.min[i] = 0.2;
      box.max[i] = 0.8;
    }
  } else if (model == "fermi_rigid") {
    rows = diag_metric(n, "-(1+(a0+a1*sin(t))*x1)^2", "1");
    box.min[0] = 0.0;
    box.max[0] = 1.5;
    box.min[1] = -0.5;
    box.max[1] = 0.5;
    model_kappa = 0.0;
  } else {
    throw UnknownModel(model);
  }

  std::vector<std::string> vcomp(n, "0");
  Params params = mp;
  if (flow == "static") {
    vcomp[0] = "1";
  } else if (flow == "rotating") {
    const std::size_t a = plane_index(fp, "plane_a", n);
    const std::size_t b = plane_index(fp, "plane_b", n);
    if (a == b) throw ParamOutOfRange("plane_b", "plane coordinates must differ");
    vcomp[0] = "1";
    vcomp[a] = "-Omega*" + coord(b);
    vcomp[b] = "Omega*" + coord(a);
    params["Omega"] = fp.at("Omega");
    if (model == "minkowski") {
      box.min[a] = box.min[b] = 0.3;
      box.max[a] = box.max[b] = 1.2;
    }
  } else if (flow == "perturbed_rotating") {
    if (n < 3) throw ParamOutOfRange("dim", "perturbed_rotating needs x1 and x2");
    vcomp[0] = "1";
    vcomp[1] = "-Omega*x2";
    vcomp[2] = "Omega*x1+eps*x1^2";
    params["Omega"] = fp.at("Omega");
    params["eps"] = fp.at("eps");
    if (model == "minkowski") {
      box.min[1] = box.min[2] = 0.3;
      box.max[1] = box.max[2] = 1.2;
    }
  } else if (flow == "milne") {
    vcomp[0] = "t";
    vcomp[1] = "x1";
    box.min[0] = 1.1;
    box.max[0] = 1.9;
    box.min[1] = 0.05;
    box.max[1] = 0.35;
    for (std::size_t i = 2; i < n; ++i) {
      box.min[i] = -0.5;
      box.max[i] = 0.5;
    }
  } else {
    throw UnknownModel(flow);
  }

  return make_scene(n, model_name + "+" + flow, coords(n), rows, vcomp, params,
                    model_kappa, box);
}

Expectations expected_verdicts(const std::string& model, const std::string& flow,
                               const Params& merged_params) {
  auto get = [&](const std::string& k, double dflt) {
    auto it = merged_params.find(k);
    return it == merged_params.end() ? dflt : it->second;
  };
  Expectations e;
  if (flow == "static" || flow == "fermi_rigid") {
    e.rigid = true;
    e.rotational = false;
    if (model == "fermi_rigid" || flow == "fermi_rigid")
      e.killing = get("a1", 0.1) == 0.0;
    else
      e.killing = true;
  } else if (flow == "rotating") {
    if (model == "fermi_rigid") return e; // outside the predicted set
    e.rigid = true;
    e.killing = true;
    e.rotational = get("Omega", 0.5) != 0.0;
  } else if (flow == "perturbed_rotating") {
    if (model == "fermi_rigid") return e;
    const bool pure = get("eps", 0.1) == 0.0;
    e.rigid = pure;
    e.killing = pure;
    e.rotational = get("Omega", 0.5) != 0.0;
  } else if (flow == "milne") {
    e.rigid = false;
    e.killing = false;
    e.rotational = false;
  }
  return e;
}

} // namespace rigidflow
