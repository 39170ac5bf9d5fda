#include <doctest.h>

#include <cstdint>
#include <vector>

#include "rigidflow/errors.hpp"
#include "rigidflow/models.hpp"
#include "rigidflow/sampling.hpp"
#include "rigidflow/scene.hpp"

using namespace rigidflow;

namespace {

Box box2(double lo, double hi) {
  Box b;
  b.min = {lo, lo};
  b.max = {hi, hi};
  return b;
}

} // namespace

TEST_CASE("make_scene expands upper triangle rows") {
  // row mu holds g_{mu,mu} .. g_{mu,n-1}
  Scene s = make_scene(2, "tri", {"t", "x1"}, {{"-1", "x1"}, {"2"}}, {"1", "0"},
                       {}, std::nullopt, box2(-1, 1));
  CHECK(s.metric_text[0 * 2 + 1] == "x1");
  CHECK(s.metric_text[1 * 2 + 0] == "x1");
  CHECK(s.metric_text[1 * 2 + 1] == "2");
  // mirrored entries share one parse
  CHECK(s.metric[0][1].get() == s.metric[1][0].get());
}

TEST_CASE("make_scene validates shapes") {
  const Box b = box2(-1, 1);
  // wrong metric row count
  CHECK_THROWS_AS(make_scene(2, "s", {"t", "x1"}, {{"-1", "0"}}, {"1", "0"}, {},
                             std::nullopt, b),
                  SchemaError);
  // full rows must be textually symmetric
  CHECK_THROWS_AS(make_scene(2, "s", {"t", "x1"}, {{"-1", "x1"}, {"t", "1"}},
                             {"1", "0"}, {}, std::nullopt, b),
                  SchemaError);
  // flow component count
  CHECK_THROWS_AS(make_scene(2, "s", {"t", "x1"}, {{"-1", "0"}, {"0", "1"}},
                             {"1"}, {}, std::nullopt, b),
                  SchemaError);
  // coordinate count
  CHECK_THROWS_AS(make_scene(2, "s", {"t"}, {{"-1", "0"}, {"0", "1"}},
                             {"1", "0"}, {}, std::nullopt, b),
                  SchemaError);
  // domain box length
  Box bad = b;
  bad.min = {-1};
  CHECK_THROWS_AS(make_scene(2, "s", {"t", "x1"}, {{"-1", "0"}, {"0", "1"}},
                             {"1", "0"}, {}, std::nullopt, bad),
                  SchemaError);
}

TEST_CASE("splitmix64 matches the reference stream") {
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == UINT64_C(0xE220A8397B1DCDAF));
  CHECK(splitmix64(state) == UINT64_C(0x6E789E6AA1B965F4));
  CHECK(splitmix64(state) == UINT64_C(0x06C45D188009454F));
  state = 0;
  const double u = splitmix64_u53(state);
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
  CHECK(u == doctest::Approx(double(UINT64_C(0xE220A8397B1DCDAF) >> 11) *
                             0x1.0p-53));
}

TEST_CASE("random sampling is deterministic and in the box") {
  const Box b = box2(0.25, 1.75);
  SamplePlan plan = parse_points_spec("random:40", 99);
  const auto pts = sample_points(plan, b, 2);
  const auto pts2 = sample_points(plan, b, 2);
  REQUIRE(pts.size() == 40);
  CHECK(pts == pts2);
  for (const auto& p : pts)
    for (double c : p) {
      CHECK(c >= 0.25);
      CHECK(c <= 1.75);
    }
  plan.seed = 100;
  CHECK(sample_points(plan, b, 2) != pts);
}

TEST_CASE("grid sampling produces cell centers, first axis slowest") {
  const Box b = box2(0.0, 1.0);
  const auto pts = sample_points(parse_points_spec("grid:2", 0), b, 2);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == std::vector<double>{0.25, 0.25});
  CHECK(pts[1] == std::vector<double>{0.25, 0.75});
  CHECK(pts[2] == std::vector<double>{0.75, 0.25});
  CHECK(pts[3] == std::vector<double>{0.75, 0.75});
}

TEST_CASE("points spec validation") {
  CHECK_THROWS_AS(parse_points_spec("random:0", 0), SchemaError);
  CHECK_THROWS_AS(parse_points_spec("random:x", 0), SchemaError);
  CHECK_THROWS_AS(parse_points_spec("lattice:3", 0), SchemaError);
  CHECK_THROWS_AS(parse_points_spec("grid:", 0), SchemaError);
  const SamplePlan p = parse_points_spec("grid:3", 17);
  CHECK(p.kind == "grid");
  CHECK(p.count == 3);
  CHECK(p.seed == 17);
}

TEST_CASE("catalog lists every built-in") {
  std::size_t metrics = 0, flows = 0;
  for (const auto& e : catalog()) {
    if (e.kind == "metric") ++metrics;
    if (e.kind == "flow") ++flows;
  }
  CHECK(metrics == 6);
  CHECK(flows == 5);
}

TEST_CASE("build_scene rejects bad inputs") {
  CHECK_THROWS_AS(build_scene("nope", 4, {}, "static", {}), UnknownModel);
  CHECK_THROWS_AS(build_scene("minkowski", 4, {}, "nope", {}), UnknownModel);
  CHECK_THROWS_AS(build_scene("minkowski", 1, {}, "static", {}), ParamOutOfRange);
  CHECK_THROWS_AS(build_scene("minkowski", 4, {{"junk", 1.0}}, "static", {}),
                  ParamOutOfRange);
  CHECK_THROWS_AS(build_scene("de_sitter", 4, {}, "milne", {}), ParamOutOfRange);
  CHECK_THROWS_AS(build_scene("de_sitter", 4, {}, "fermi_rigid", {}), ParamOutOfRange);
  // chart degenerates when kappa*rho^2 reaches 1 in the box
  CHECK_THROWS_AS(build_scene("constant_curvature", 4, {{"kappa", 99.0}}, "static", {}),
                  ParamOutOfRange);
  // rotation plane indices must be distinct spatial coordinates
  CHECK_THROWS_AS(build_scene("minkowski", 4, {}, "rotating",
                              {{"plane_a", 2.0}, {"plane_b", 2.0}}),
                  ParamOutOfRange);
  CHECK_THROWS_AS(build_scene("minkowski", 4, {}, "rotating", {{"plane_a", 0.0}}),
                  ParamOutOfRange);
  CHECK_THROWS_AS(build_scene("minkowski", 4, {}, "rotating", {{"plane_a", 1.5}}),
                  ParamOutOfRange);
  CHECK_THROWS_AS(build_scene("minkowski", 2, {}, "perturbed_rotating", {}),
                  ParamOutOfRange);
}

TEST_CASE("build_scene wires parameters and kappa") {
  Scene s = build_scene("constant_curvature", 5, {{"kappa", -1.0}}, "rotating",
                        {{"Omega", 0.25}});
  CHECK(s.dimension == 5);
  CHECK(s.name == "constant_curvature+rotating");
  REQUIRE(s.model_kappa.has_value());
  CHECK(*s.model_kappa == -1.0);
  CHECK(s.parameters.at("Omega") == 0.25);
  CHECK(s.parameters.at("kappa") == -1.0);

  Scene f = build_scene("minkowski", 3, {}, "fermi_rigid", {{"a1", 0.0}});
  CHECK(f.name == "fermi_rigid+static");
  CHECK(f.parameters.at("a0") == 0.3);
  CHECK(f.parameters.at("a1") == 0.0);
  REQUIRE(f.model_kappa.has_value());
  CHECK(*f.model_kappa == 0.0);

  Scene e = build_scene("einstein_static", 4, {}, "static", {});
  CHECK_FALSE(e.model_kappa.has_value());
}

TEST_CASE("expected_verdicts spot checks") {
  Expectations e = expected_verdicts("minkowski", "milne", {});
  CHECK((e.rigid.has_value() && !*e.rigid));
  CHECK((e.killing.has_value() && !*e.killing));

  e = expected_verdicts("de_sitter", "rotating", {{"Omega", 0.0}});
  CHECK((e.rotational.has_value() && !*e.rotational));
  CHECK((e.rigid.has_value() && *e.rigid));

  e = expected_verdicts("minkowski", "perturbed_rotating", {{"Omega", 0.5}, {"eps", 0.0}});
  CHECK((e.killing.has_value() && *e.killing));

  e = expected_verdicts("minkowski", "fermi_rigid", {{"a0", 0.3}, {"a1", 0.1}});
  CHECK((e.killing.has_value() && !*e.killing));
  CHECK((e.rigid.has_value() && *e.rigid));

  // fermi chart with a rotating flow is outside the predicted set
  e = expected_verdicts("fermi_rigid", "rotating", {});
  CHECK_FALSE(e.rigid.has_value());
}
