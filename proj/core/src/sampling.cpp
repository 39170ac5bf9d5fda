#include "rigidflow/sampling.hpp"

#include "rigidflow/errors.hpp"

namespace rigidflow {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double splitmix64_u53(std::uint64_t& state) {
  return double(splitmix64(state) >> 11) * 0x1.0p-53;
}

SamplePlan parse_points_spec(const std::string& spec, std::uint64_t seed) {
  SamplePlan plan;
  plan.seed = seed;
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    plan.kind = spec.substr(0, colon);
    const std::string num = spec.substr(colon + 1);
    std::size_t used = 0;
    try {
      plan.count = std::stoull(num, &used);
    } catch (...) {
      used = 0;
    }
    if ((plan.kind == "random" || plan.kind == "grid") && used == num.size() &&
        plan.count > 0)
      return plan;
  }
  throw SchemaError("points", "expected random:N or grid:R, got '" + spec + "'");
}

std::vector<std::vector<double>> sample_points(const SamplePlan& plan, const Box& box,
                                               std::size_t n) {
  std::vector<std::vector<double>> pts;
  if (plan.kind == "random") {
    std::uint64_t state = plan.seed;
    pts.assign(plan.count, std::vector<double>(n));
    for (std::size_t p = 0; p < plan.count; ++p)
      for (std::size_t a = 0; a < n; ++a)
        pts[p][a] = box.min[a] + splitmix64_u53(state) * (box.max[a] - box.min[a]);
    return pts;
  }
  const std::size_t r = plan.count;
  std::size_t total = 1;
  for (std::size_t a = 0; a < n; ++a) total *= r;
  pts.assign(total, std::vector<double>(n));
  for (std::size_t p = 0; p < total; ++p) {
    std::size_t rest = p;
    for (std::size_t a = n; a-- > 0;) {
      const std::size_t cell = rest % r;
      rest /= r;
      pts[p][a] =
          box.min[a] + (double(cell) + 0.5) / double(r) * (box.max[a] - box.min[a]);
    }
  }
  return pts;
}

} // namespace rigidflow
