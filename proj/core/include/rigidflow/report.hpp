#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigidflow/identities.hpp"
#include "rigidflow/kinematics.hpp"
#include "rigidflow/models.hpp"
#include "rigidflow/sampling.hpp"

namespace rigidflow {

struct Tolerances {
  double identity = 1e-7;   // scale-relative identity residuals
  double verdict = 1e-6;    // raw verdict residuals (rigidity, Killing, ...)
  double rotational = 1e-4; // vorticity magnitude above this counts as rotation
  double lambda = 1e-8;     // the lambda relation has its own band
};

// A scene declared flat must back it up: the raw Riemann tensor has to stay
// below this at every usable point or the flat evolution mode is refused.
inline constexpr double kEpsFlatRiemann = 1e-9;

struct PointRecord {
  std::vector<double> point;
  bool ok = false;
  std::string error; // failure description when !ok
  KinematicInvariants kin;
};

struct AnalysisResult {
  Scene scene;
  SamplePlan plan;
  Tolerances tol;
  std::vector<PointRecord> records;
  std::size_t ok_count = 0;
  TimelikeScan timelike;
  double max_riemann = 0.0; // raw max-abs coordinate Riemann over usable points

  std::vector<IdentityResult> identities;
  std::vector<Verdict> verdicts; // firstprop, killing-direct, homogeneity,
                                 // then rfif and finalc when applicable
  std::string isometry_note;     // why rfif/finalc are absent, when they are
  bool has_isometry = false;
  IsometryCriteria isometry;
  std::vector<double> max_I0_K; // raw I_0(K_i) maxima per spatial index

  TheoremReport theorem;

  std::optional<Expectations> expectations;
  std::vector<std::string> expectation_mismatches;

  bool identities_ok = true; // every asserted identity within its tolerance
};

// Samples the scene and evaluates frames, kinematics, identity suite,
// verdicts, and the theorem instance. Per-point numerical failures become
// excluded point records; scene-level failures (for example a metric that
// claims to be flat but is not) are thrown.
AnalysisResult run_analysis(const Scene& scene, const SamplePlan& plan,
                            const Tolerances& tol,
                            const std::optional<Expectations>& expect);

// Reads a scene description from a JSON file. Throws SchemaError on shape
// or type problems and the usual expression errors on bad component text.
Scene load_scene(const std::string& path);

enum class ReportKind { Analyze, Verify, Theorem };

// Renders are byte-deterministic for identical inputs. `suite` filters the
// identity list for Verify ("all", "structural", "curvature", "derivatives")
// and is ignored otherwise.
std::string render_text(const AnalysisResult& r, ReportKind kind,
                        const std::string& suite);
std::string render_json(const AnalysisResult& r, ReportKind kind,
                        const std::string& suite);

// Exit-status predicates shared by the command-line tool and the tests.
bool analyze_ok(const AnalysisResult& r);
bool verify_suite_ok(const AnalysisResult& r, const std::string& suite);

// Identity names belonging to a verify suite.
std::vector<std::string> suite_identities(const std::string& suite);

} // namespace rigidflow
