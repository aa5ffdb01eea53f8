#include "liegeo/soliton.hpp"

#include <cmath>
#include <sstream>

namespace liegeo {

SolitonClass classify(double c, double eps) {
  if (c > eps) return SolitonClass::Shrinking;
  if (c < -eps) return SolitonClass::Expanding;
  return SolitonClass::Steady;
}

const char* to_string(SolitonClass cls) {
  switch (cls) {
    case SolitonClass::Shrinking: return "shrinking";
    case SolitonClass::Steady: return "steady";
    case SolitonClass::Expanding: return "expanding";
  }
  return "?";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::ClosedForm1D: return "closed_form_1d";
    case Method::ClosedForm2D: return "closed_form_2d";
    case Method::NilpotentClosedForm: return "nilpotent_closed_form";
  }
  return "?";
}

SolitonVerdict oracle_solve(const MetricLieAlgebra& M, double eps) {
  const int n = M.dim();
  // Work in the orthonormal frame: the verdict is basis independent and the
  // Ricci operator is already reported there.
  const LieAlgebra& L = M.framed_algebra();
  const RicciData ricci = ricci_trace_formula(M);
  const Mat& Ric = ricci.ric_operator;

  SolitonVerdict verdict;
  verdict.method = Method::Oracle;
  verdict.ricci = ricci;

  std::vector<ScalarConstraint> constraints;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec lhs = L.bracket_basis(i, j);
      const Vec rhs = L.bracket(Ric.col(i), Vec::Unit(n, j)) +
                      L.bracket(Vec::Unit(n, i), Ric.col(j)) - Ric * lhs;
      constraints.push_back({lhs, rhs});

      PairConstraint pc;
      pc.i = i;
      pc.j = j;
      const double sq = lhs.squaredNorm();
      if (lhs.cwiseAbs().maxCoeff() > eps) {
        pc.defined = true;
        pc.candidate_c = lhs.dot(rhs) / sq;
        pc.fit_residual = (pc.candidate_c * lhs - rhs).cwiseAbs().maxCoeff();
      }
      verdict.c_constraints.push_back(pc);
    }
  }

  const ScalarSolution sol = solve_for_scalar(constraints, eps);
  switch (sol.kind) {
    case ScalarSolution::Kind::Underdetermined:
      // All brackets vanish: abelian, Ric = 0 and the minimal-norm soliton
      // constant is 0.
      verdict.is_soliton = true;
      verdict.c = 0.0;
      break;
    case ScalarSolution::Kind::Unique:
      verdict.is_soliton = true;
      verdict.c = sol.value;
      break;
    case ScalarSolution::Kind::Infeasible:
      verdict.is_soliton = false;
      break;
  }

  if (verdict.is_soliton) {
    verdict.D = Ric - verdict.c * Mat::Identity(n, n);
    const DerivationCheck check = L.is_derivation(verdict.D, eps);
    verdict.derivation_residual = check.residual;
    if (!check.pass) verdict.is_soliton = false;
    verdict.soliton_class = classify(verdict.c, eps);
  }
  return verdict;
}

namespace {

std::string describe_verdict(bool soliton, double c) {
  std::ostringstream os;
  if (soliton)
    os << "soliton with c = " << c;
  else
    os << "no soliton";
  return os.str();
}

void compare_methods(CrossReport& report, const MethodReport& method, double eps) {
  if (!method.applicable) return;
  const bool oracle_soliton = report.oracle.is_soliton;
  const double oracle_c = report.oracle.c;
  const bool agree = method.is_soliton == oracle_soliton &&
                     (!method.is_soliton || approx_equal(method.c, oracle_c, eps));
  if (!agree) {
    Discrepancy dsc;
    dsc.method_a = to_string(method.method) + std::string(method.note.empty() ? "" : " (" + method.note + ")");
    dsc.method_b = "oracle";
    dsc.description = dsc.method_a + ": " + describe_verdict(method.is_soliton, method.c) +
                      "; oracle: " + describe_verdict(oracle_soliton, oracle_c);
    report.discrepancies.push_back(std::move(dsc));
  }
}

}  // namespace

CrossReport cross_validate(const MetricLieAlgebra& M, double eps) {
  CrossReport report;
  report.oracle = oracle_solve(M, eps);

  const DerivedInfo derived = M.algebra().derived_subalgebra(eps);
  report.derived_dim = derived.dim1;
  if (derived.dim1 > 2)
    throw UnsupportedDerivedDim("cross_validate requires dim g' in {0, 1, 2}");

  MethodReport oracle_entry;
  oracle_entry.method = Method::Oracle;
  oracle_entry.applicable = true;
  oracle_entry.is_soliton = report.oracle.is_soliton;
  oracle_entry.c = report.oracle.c;
  oracle_entry.residual = report.oracle.derivation_residual;
  report.methods.push_back(oracle_entry);

  if (derived.dim1 == 1) {
    const DerivedDecomposition d = decompose(M);
    const ClosedFormVerdict1D v = soliton_classify_1d(d, eps);
    report.closed_form_1d = v;

    MethodReport published;
    published.method = Method::ClosedForm1D;
    published.applicable = true;
    published.note = "published";
    published.is_soliton = v.published_case != ClosedFormCase1D::None;
    published.c = v.published_c;
    report.methods.push_back(published);
    compare_methods(report, published, eps);

    MethodReport corrected;
    corrected.method = Method::ClosedForm1D;
    corrected.applicable = true;
    corrected.note = "corrected";
    corrected.is_soliton = v.corrected_soliton;
    corrected.c = v.corrected_c;
    report.methods.push_back(corrected);
    compare_methods(report, corrected, eps);
  } else if (derived.dim1 == 2) {
    const DerivedDecomposition d = decompose(M);
    const SolitonSystemSolution sys = soliton_system_solve(d, eps);
    report.closed_form_2d = sys;

    MethodReport system;
    system.method = Method::ClosedForm2D;
    system.applicable = true;
    system.is_soliton = sys.consistent;
    system.c = sys.c;
    system.residual = sys.residual;
    report.methods.push_back(system);
    compare_methods(report, system, eps);

    const double invariant_norm =
        std::max({d.a1().norm(), d.a2().norm(), d.b1().norm(), d.b2().norm()});
    if (invariant_norm <= eps) {
      const NilpotentSolitonSolution nil = nilpotent_soliton_solve(d, eps);
      report.nilpotent_closed_form = nil;
      MethodReport corollary;
      corollary.method = Method::NilpotentClosedForm;
      corollary.applicable = true;
      corollary.is_soliton = nil.consistent;
      corollary.c = nil.c;
      corollary.residual = nil.residual;
      report.methods.push_back(corollary);
      compare_methods(report, corollary, eps);
    }
  }
  return report;
}

}  // namespace liegeo
