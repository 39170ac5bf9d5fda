#include "rigidflow/scene.hpp"

#include <set>

#include "rigidflow/errors.hpp"

namespace rigidflow {

Scene make_scene(std::size_t dimension, std::string name,
                 std::vector<std::string> coordinates,
                 const std::vector<std::vector<std::string>>& metric_rows,
                 const std::vector<std::string>& flow,
                 Params parameters, std::optional<double> model_kappa, Box domain) {
  const std::size_t n = dimension;
  if (n < 2) throw SchemaError("dimension", "must be at least 2");
  if (coordinates.size() != n)
    throw SchemaError("coordinates", "expected " + std::to_string(n) + " names");
  std::set<std::string> seen;
  for (const auto& c : coordinates) {
    if (!seen.insert(c).second) throw SchemaError("coordinates", "duplicate name '" + c + "'");
    if (parameters.count(c))
      throw SchemaError("coordinates", "'" + c + "' is also a parameter");
  }
  if (metric_rows.size() != n)
    throw SchemaError("metric", "expected " + std::to_string(n) + " rows");
  if (flow.size() != n)
    throw SchemaError("flow", "expected " + std::to_string(n) + " components");
  if (domain.min.size() != n || domain.max.size() != n)
    throw SchemaError("domain", "min/max must each have " + std::to_string(n) + " entries");
  for (std::size_t i = 0; i < n; ++i)
    if (!(domain.min[i] <= domain.max[i]))
      throw SchemaError("domain", "min exceeds max on axis " + std::to_string(i));

  // Normalize to a full matrix of source texts. Upper-triangle rows (row mu
  // holding g_{mu,mu}..g_{mu,n-1}) are mirrored; full rows must already be
  // textually symmetric.
  std::vector<std::string> text(n * n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    const auto& row = metric_rows[mu];
    if (row.size() == n) {
      for (std::size_t nu = 0; nu < n; ++nu) text[mu * n + nu] = row[nu];
    } else if (row.size() == n - mu) {
      for (std::size_t k = 0; k < row.size(); ++k) text[mu * n + (mu + k)] = row[k];
    } else {
      throw SchemaError("metric", "row " + std::to_string(mu) + " has " +
                                      std::to_string(row.size()) + " entries, expected " +
                                      std::to_string(n) + " or " + std::to_string(n - mu));
    }
  }
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = mu + 1; nu < n; ++nu) {
      std::string& lower = text[nu * n + mu];
      const std::string& upper = text[mu * n + nu];
      if (lower.empty()) {
        lower = upper;
      } else if (lower != upper) {
        throw SchemaError("metric", "entry (" + std::to_string(nu) + "," +
                                        std::to_string(mu) +
                                        ") does not match the upper triangle textually");
      }
    }
  }

  std::vector<std::string> param_names;
  for (const auto& kv : parameters) param_names.push_back(kv.first);

  Scene s;
  s.dimension = n;
  s.name = std::move(name);
  s.coordinates = std::move(coordinates);
  s.parameters = std::move(parameters);
  s.model_kappa = model_kappa;
  s.domain = std::move(domain);
  s.metric_text = text;
  s.metric.assign(n, std::vector<ExprPtr>(n));
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = mu; nu < n; ++nu) {
      // One parse per unordered pair: both triangle slots share the node.
      ExprPtr e = parse_expression(text[mu * n + nu], s.coordinates, param_names);
      s.metric[mu][nu] = e;
      s.metric[nu][mu] = e;
    }
  }
  s.flow_text = flow;
  for (const auto& comp : flow)
    s.flow.push_back(parse_expression(comp, s.coordinates, param_names));
  return s;
}

} // namespace rigidflow
