#ifndef RIGIDFLOW_VERDICT_HPP
#define RIGIDFLOW_VERDICT_HPP

#include <string>
#include <vector>

namespace rigidflow {

// Pass/fail decision over a set of sample points, with enough context to
// reproduce the failure: the criterion label, the worst residual seen, and
// where it happened. Criterion labels used by the library:
//   firstprop      rigidity (symmetric part of M vanishes)
//   rfif           acceleration curl-free and constant along the flow
//   finalc         M and K both constant along the flow
//   killing-direct Lie derivative of the metric along V vanishes
//   homogeneity    constant-curvature residual of the ambient metric
struct Verdict {
  std::string criterion;
  bool pass = false;
  double worst_residual = 0.0;
  std::vector<double> worst_point;
  double tolerance = 0.0;
};

} // namespace rigidflow

#endif
