#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigidflow/scene.hpp"

namespace rigidflow {

struct ParamSpec {
  std::string name;
  double value = 0.0; // default
  std::string meaning;
};

// One entry of the built-in catalog, for the `models` listing.
struct CatalogEntry {
  std::string name;
  std::string kind; // "metric" or "flow"
  std::string summary;
  std::vector<ParamSpec> params;
  std::string restriction; // empty when the entry combines freely
};

const std::vector<CatalogEntry>& catalog();

// What the catalog predicts for a model+flow combination; unset fields mean
// the combination is valid but outside the predicted set.
struct Expectations {
  std::optional<bool> rigid, killing, rotational;
};

// Builds a ready-to-run scene from catalog names. Unlisted parameters keep
// their defaults. Throws UnknownModel for names outside the catalog and
// ParamOutOfRange for bad parameter values or invalid model/flow pairings.
Scene build_scene(const std::string& model, std::size_t dim, const Params& model_params,
                  const std::string& flow, const Params& flow_params);

Expectations expected_verdicts(const std::string& model, const std::string& flow,
                               const Params& merged_params);

} // namespace rigidflow
