#pragma once

#include <string>
#include <vector>

#include "rigidflow/frame.hpp"

namespace rigidflow {

// One structural or curvature identity, accumulated over sample points.
// Each identity is written as a sum of signed terms that must cancel; the
// recorded residual is |sum| / (1 + max|term|), so it stays meaningful when
// the individual terms are large. The raw imbalance at the worst tuple is
// recoverable as the plain sum of worst_terms.
struct IdentityResult {
  std::string name;
  std::string mode;              // extra qualifier ("flat", "general"), may be empty
  bool asserted = true;          // counts toward pass/fail at the caller's tolerance
  std::string note;              // why the identity is informational, if it is
  double residual = 0.0;
  std::vector<double> worst_point;
  std::vector<std::size_t> worst_tuple;
  std::vector<double> worst_terms;
  double worst_scale = 1.0;
};

// Folds one tuple's signed terms into the running result.
void consider_tuple(IdentityResult& r, const std::vector<double>& point,
                    const std::vector<std::size_t>& tuple,
                    const std::vector<double>& terms);

// Torsion-free structure equation for the coframe, evaluated on every
// coordinate 2-plane: d_a omega^mu_b - d_b omega^mu_a must equal
// sum_nu [omega^nu_a (omega^mu_nu)_b - omega^nu_b (omega^mu_nu)_a],
// where (omega^mu_nu)_a = ghat^mu_{nu rho} omega^rho_a.
void check_first_structural(const FrameSample& fs, IdentityResult& r);

// For a Killing flow the frame factor obeys I_0(lambda) = 0 and
// I_i(lambda) = lambda K_i.
void check_lambda_relation(const FrameSample& fs, IdentityResult& r);

// Antisymmetrized acceleration gradient equals the antisymmetrized M
// evolution: (K_{i;j} - K_{j;i}) - (Mdot_{ij} - Mdot_{ji}) = 0.
void check_confusion(const FrameSample& fs, const DSample& ds, IdentityResult& r);

// Full evolution identity for the acceleration gradient:
// K_{i;j} + K_i K_j + (M^T M)_{ij} + Rhat^0_{i0j} - Mdot_{ij} = 0.
// Pass Rhat = nullptr for the flat mode, which drops the curvature term;
// the caller is responsible for checking the metric really is flat.
void check_acceleration_evolution(const FrameSample& fs, const DSample& ds,
                                  const double* Rhat, IdentityResult& r);

// Curvature of the reduced spatial connection against the ambient curvature:
// Rhat^i_{jab} = Rt^i_{jab} + M_{ij}(M_{ab} - M_{ba}) + M_{ia}M_{jb} - M_{ib}M_{ja}.
void check_gooaffa(const FrameSample& fs, const BaseCurvatureSample& bc,
                   const double* Rhat, IdentityResult& r);

// Diagonal sectional defect for a rigid flow: (Rt - Rhat)_{ijji} = 3 M_{ij}^2
// for each off-diagonal pair, no summation.
void check_pow1_trace(const FrameSample& fs, const BaseCurvatureSample& bc,
                      const double* Rhat, IdentityResult& r);

// Mixed curvature component on a constant-curvature background:
// M_{ij;k} - M_{ik;j} - 2 K_i M_{kj} = 0.
void check_R0ijk(const FrameSample& fs, const DSample& ds, IdentityResult& r);

} // namespace rigidflow
