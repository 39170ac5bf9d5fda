// Microbenchmarks for the per-point pipeline: jet evaluation, frame
// adaptation, derivative assembly, and the full identity sweep. Run with
// --benchmark_min_time=... as usual; figures are per sample point.

#include <benchmark/benchmark.h>

#include <vector>

#include "rigidflow/frame.hpp"
#include "rigidflow/geometry.hpp"
#include "rigidflow/identities.hpp"
#include "rigidflow/kinematics.hpp"
#include "rigidflow/models.hpp"

using namespace rigidflow;

namespace {

Scene rotating_scene(std::size_t dim) {
  return build_scene("minkowski", dim, {}, "rotating", {{"Omega", 0.5}});
}

Scene curved_scene(std::size_t dim) {
  return build_scene("de_sitter", dim, {}, "rotating", {{"Omega", 0.3}});
}

std::vector<double> mid_point(const Scene& s) {
  std::vector<double> pt(s.dimension);
  for (std::size_t i = 0; i < s.dimension; ++i)
    pt[i] = 0.5 * (s.domain.min[i] + s.domain.max[i]);
  return pt;
}

void BM_MetricJets(benchmark::State& state) {
  Scene s = curved_scene(std::size_t(state.range(0)));
  const std::vector<double> pt = mid_point(s);
  for (auto _ : state)
    benchmark::DoNotOptimize(metric_jets(s, pt));
}

void BM_AdaptFrame(benchmark::State& state) {
  Scene s = rotating_scene(std::size_t(state.range(0)));
  const std::vector<double> pt = mid_point(s);
  for (auto _ : state)
    benchmark::DoNotOptimize(adapt_frame(s, pt));
}

void BM_AdaptFrameCurved(benchmark::State& state) {
  Scene s = curved_scene(std::size_t(state.range(0)));
  const std::vector<double> pt = mid_point(s);
  for (auto _ : state)
    benchmark::DoNotOptimize(adapt_frame(s, pt));
}

void BM_DerivativesAndKinematics(benchmark::State& state) {
  Scene s = rotating_scene(4);
  FrameSample fs = adapt_frame(s, mid_point(s));
  for (auto _ : state) {
    benchmark::DoNotOptimize(covariant_derivatives(fs));
    benchmark::DoNotOptimize(kinematic_invariants(fs));
  }
}

// everything one analysis point costs after sampling: frame, derivatives,
// base and ambient curvature, and the full identity set
void BM_IdentitySweep(benchmark::State& state) {
  Scene s = curved_scene(std::size_t(state.range(0)));
  const std::vector<double> pt = mid_point(s);
  for (auto _ : state) {
    FrameSample fs = adapt_frame(s, pt);
    DSample ds = covariant_derivatives(fs);
    BaseCurvatureSample bc = base_curvature(fs);
    std::vector<double> Rhat = project_riemann(fs, riemann(christoffel(fs.metric)));
    IdentityResult r;
    check_first_structural(fs, r);
    check_lambda_relation(fs, r);
    check_confusion(fs, ds, r);
    check_acceleration_evolution(fs, ds, Rhat.data(), r);
    check_gooaffa(fs, bc, Rhat.data(), r);
    check_pow1_trace(fs, bc, Rhat.data(), r);
    check_R0ijk(fs, ds, r);
    benchmark::DoNotOptimize(r);
  }
}

BENCHMARK(BM_MetricJets)->Arg(4)->Arg(6);
BENCHMARK(BM_AdaptFrame)->Arg(4)->Arg(6);
BENCHMARK(BM_AdaptFrameCurved)->Arg(4)->Arg(5);
BENCHMARK(BM_DerivativesAndKinematics);
BENCHMARK(BM_IdentitySweep)->Arg(4)->Arg(5);

} // namespace

BENCHMARK_MAIN();
