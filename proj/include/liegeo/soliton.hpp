#ifndef LIEGEO_SOLITON_HPP
#define LIEGEO_SOLITON_HPP

#include <optional>
#include <string>
#include <vector>

#include "liegeo/decomp.hpp"
#include "liegeo/onedim.hpp"
#include "liegeo/twodim.hpp"

namespace liegeo {

enum class SolitonClass { Shrinking, Steady, Expanding };

SolitonClass classify(double c, double eps);
const char* to_string(SolitonClass cls);

enum class Method { Oracle, ClosedForm1D, ClosedForm2D, NilpotentClosedForm };
const char* to_string(Method m);

/// One affine constraint c * [b_i, b_j] = [Ric b_i, b_j] + [b_i, Ric b_j]
/// - Ric [b_i, b_j], assembled over frame basis pairs; retained so
/// non-soliton verdicts can explain which pairs demand which c.
struct PairConstraint {
  int i = 0, j = 0;         ///< frame basis indices (0-based)
  double candidate_c = 0.0;  ///< least-squares c for this pair (when defined)
  double fit_residual = 0.0; ///< ||candidate_c * lhs - rhs||_inf
  bool defined = false;      ///< lhs nonzero
};

struct SolitonVerdict {
  bool is_soliton = false;
  double c = 0.0;
  SolitonClass soliton_class = SolitonClass::Steady;
  Mat D;  ///< derivation Ric - c Id, frame coordinates (when soliton)
  double derivation_residual = 0.0;
  std::vector<PairConstraint> c_constraints;
  Method method = Method::Oracle;
  RicciData ricci;
};

/// Generic decision procedure: D := Ric - c Id must be a derivation, which
/// is affine in c.  Works for any derived-algebra dimension and shares no
/// code with the closed-form checkers.  Underdetermined systems (abelian)
/// resolve to c = 0.
SolitonVerdict oracle_solve(const MetricLieAlgebra& M, double eps);

struct MethodReport {
  Method method = Method::Oracle;
  bool applicable = false;
  bool is_soliton = false;
  double c = 0.0;
  double residual = 0.0;
  std::string note;
};

struct Discrepancy {
  std::string method_a;
  std::string method_b;
  std::string description;
};

struct CrossReport {
  SolitonVerdict oracle;
  std::vector<MethodReport> methods;
  std::vector<Discrepancy> discrepancies;
  std::string authoritative = "oracle";
  std::optional<ClosedFormVerdict1D> closed_form_1d;
  std::optional<SolitonSystemSolution> closed_form_2d;
  std::optional<NilpotentSolitonSolution> nilpotent_closed_form;
  int derived_dim = 0;
};

/// Runs the oracle plus every applicable closed-form method and reports the
/// per-method verdicts and their disagreements; the oracle is authoritative.
/// Requires dim g' in {0, 1, 2}.
CrossReport cross_validate(const MetricLieAlgebra& M, double eps);

}  // namespace liegeo

#endif
