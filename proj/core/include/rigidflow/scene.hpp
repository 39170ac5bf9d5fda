#ifndef RIGIDFLOW_SCENE_HPP
#define RIGIDFLOW_SCENE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rigidflow/expr.hpp"

namespace rigidflow {

// Metric entries with |det g| at or below this are rejected as degenerate.
constexpr double kEpsNondegenerate = 1e-10;
// g(V,V) must be below -kEpsTimelike for the flow to count as timelike.
constexpr double kEpsTimelike = 1e-10;
// Gram-Schmidt candidates with g(w,w) below this are linearly dependent
// on the frame built so far and are skipped.
constexpr double kEpsGramSchmidt = 1e-10;

struct Box {
  std::vector<double> min, max;
};

// A pseudo-Riemannian metric and a flow, both given as coordinate
// expressions, plus the coordinate box the analysis samples from.
// metric[mu][nu] and metric[nu][mu] always reference the same Expr, so
// symmetry holds by construction.
struct Scene {
  std::size_t dimension = 0;
  std::string name;  // model name or scene file, for report digests
  std::vector<std::string> coordinates;
  std::vector<std::vector<ExprPtr>> metric;
  std::vector<std::string> metric_text;  // n*n row-major source text
  std::vector<ExprPtr> flow;
  std::vector<std::string> flow_text;
  Params parameters;
  std::optional<double> model_kappa;
  Box domain;
};

// Builds a Scene from component source texts. Rows of `metric_rows` are
// either full length-n rows (the lower triangle must then match the upper
// triangle textually) or upper-triangle rows (row mu holds entries
// g_{mu,mu} .. g_{mu,n-1}). Throws SchemaError on shape or symmetry
// violations, SyntaxError/UnknownSymbol on bad component expressions.
Scene make_scene(std::size_t dimension, std::string name,
                 std::vector<std::string> coordinates,
                 const std::vector<std::vector<std::string>>& metric_rows,
                 const std::vector<std::string>& flow,
                 Params parameters, std::optional<double> model_kappa, Box domain);

} // namespace rigidflow

#endif
