#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigidflow/scene.hpp"

namespace rigidflow {

// How sample points are drawn. `rng` names the exact generator so reports
// stay reproducible across builds: splitmix64 for the bit stream, with
// doubles formed as (x >> 11) * 2^-53.
struct SamplePlan {
  std::string kind;       // "random" or "grid"
  std::size_t count = 0;  // random: number of points; grid: cells per axis
  std::uint64_t seed = 0;
  std::string rng = "splitmix64/u53";
};

// Parses "random:N" or "grid:R". Throws SchemaError on anything else.
SamplePlan parse_points_spec(const std::string& spec, std::uint64_t seed);

// random: `count` points, coordinates drawn axis by axis in order.
// grid: cell centers of a count^n lattice, first axis slowest.
std::vector<std::vector<double>> sample_points(const SamplePlan& plan, const Box& box,
                                               std::size_t n);

// Raw generator, exposed for tests.
std::uint64_t splitmix64(std::uint64_t& state);
double splitmix64_u53(std::uint64_t& state);

} // namespace rigidflow
