#include "liegeo/onedim.hpp"

#include <cmath>

namespace liegeo {

namespace {

void check_ambient(const DerivedDecomposition& d, const Vec& x, const char* what) {
  if (x.size() != d.ambient_dim()) throw DimensionMismatch(std::string(what) + ": wrong dimension");
}

void check_gamma_unit(const DerivedDecomposition& d, const Vec& u, double eps) {
  if (u.size() != d.gamma_dim())
    throw DimensionMismatch("sectional_1d: Gamma vector has wrong dimension");
  if (!approx_equal(u.squaredNorm(), 1.0, eps))
    throw NonOrthonormalInput("sectional_1d: input is not a unit vector");
}

}  // namespace

Vec connection_1d(const DerivedDecomposition& d, const Vec& x, const Vec& y) {
  d.require_kind(DecompKind::OneDim);
  check_ambient(d, x, "connection_1d x");
  check_ambient(d, y, "connection_1d y");
  const int m = d.gamma_dim();
  const Vec& a = d.a();
  const Mat& f = d.f();

  const double xe = x[0], ye = y[0];
  const Vec ux = x.tail(m), uy = y.tail(m);

  Vec out = Vec::Zero(d.ambient_dim());
  // nabla_e e = a
  out.tail(m) += xe * ye * a;
  // nabla_e u = -1/2 f(u) - <u, a> e
  out.tail(m) += xe * (-0.5 * (f * uy));
  out[0] += xe * (-uy.dot(a));
  // nabla_u e = -1/2 f(u)
  out.tail(m) += ye * (-0.5 * (f * ux));
  // nabla_u v = 1/2 <f(u), v> e
  out[0] += 0.5 * (f * ux).dot(uy);
  return out;
}

double sectional_1d(const DerivedDecomposition& d, const Vec& u) {
  d.require_kind(DecompKind::OneDim);
  check_gamma_unit(d, u, d.eps());
  const double a_u = d.a().dot(u);
  return 0.25 * (d.f() * u).squaredNorm() - a_u * a_u;
}

double sectional_1d(const DerivedDecomposition& d, const Vec& u, const Vec& v) {
  d.require_kind(DecompKind::OneDim);
  check_gamma_unit(d, u, d.eps());
  check_gamma_unit(d, v, d.eps());
  if (!approx_zero(u.dot(v), d.eps()))
    throw NonOrthonormalInput("sectional_1d: inputs are not orthogonal");
  const double fu_v = (d.f() * u).dot(v);
  return -0.75 * fu_v * fu_v;
}

OneDimRicci ricci_1d(const DerivedDecomposition& d) {
  d.require_kind(DecompKind::OneDim);
  const int n = d.ambient_dim();
  const int m = d.gamma_dim();
  const Vec& a = d.a();
  const Mat& f = d.f();
  const Mat f2 = f * f;

  OneDimRicci out;
  out.ric_e = Vec::Zero(n);
  out.ric_e[0] = -(0.25 * f2.trace() + a.squaredNorm());
  out.ric_e.tail(m) = -(f * a);

  out.ric_gamma = Mat::Zero(n, m);
  for (int j = 0; j < m; ++j) {
    const Vec u = Vec::Unit(m, j);
    out.ric_gamma.col(j)[0] = (f * u).dot(a);
    out.ric_gamma.col(j).tail(m) = 0.5 * (f2 * u) - a[j] * a;
  }

  out.ric_operator = Mat::Zero(n, n);
  out.ric_operator.col(0) = out.ric_e;
  out.ric_operator.rightCols(m) = out.ric_gamma;
  return out;
}

ClosedFormVerdict1D soliton_classify_1d(const DerivedDecomposition& d, double eps) {
  d.require_kind(DecompKind::OneDim);
  const Vec& a = d.a();
  const Mat& f = d.f();
  const Mat f3 = f * f * f;
  const double tr_f2 = (f * f).trace();
  const double a_norm2 = a.squaredNorm();
  const bool unimodular = std::sqrt(a_norm2) <= eps;

  auto cubic_residual = [&](double kappa) {
    if (f.size() == 0) return 0.0;
    return (f3 - kappa * f).cwiseAbs().maxCoeff();
  };

  ClosedFormVerdict1D v;
  v.residuals["a_norm"] = std::sqrt(a_norm2);
  v.residuals["tr_f_sq"] = tr_f2;

  if (unimodular) {
    const double published_kappa = -0.25 * tr_f2;
    const double published_res = cubic_residual(published_kappa);
    v.residuals["published_cubic"] = published_res;
    if (published_res <= eps) {
      v.published_case = ClosedFormCase1D::UnimodularSteady;
      v.published_c = 0.0;
    }

    // Corrected branch: solve f^3 = (c - 1/4 tr f^2) f for c.
    std::vector<ScalarConstraint> constraints;
    Vec lhs(Eigen::Map<const Vec>(f.data(), f.size()));
    const Mat rhs_mat = f3 + 0.25 * tr_f2 * f;
    Vec rhs(Eigen::Map<const Vec>(rhs_mat.data(), rhs_mat.size()));
    constraints.push_back({lhs, rhs});
    const ScalarSolution sol = solve_for_scalar(constraints, eps);
    v.residuals["corrected_cubic"] = sol.residual;
    if (sol.kind == ScalarSolution::Kind::Unique) {
      v.corrected_soliton = true;
      v.corrected_c = sol.value;
    } else if (sol.kind == ScalarSolution::Kind::Underdetermined) {
      v.corrected_soliton = true;  // f = 0: flat abelian presentation
      v.corrected_c = 0.0;
    }
  } else {
    const double ker_res = (f * a).cwiseAbs().maxCoeff();
    const double c = -a_norm2;
    const double cubic_res = cubic_residual(-(2.0 * a_norm2 + 0.25 * tr_f2));
    v.residuals["a_in_ker_f"] = ker_res;
    v.residuals["published_cubic"] = cubic_res;
    if (ker_res <= eps && cubic_res <= eps) {
      v.published_case = ClosedFormCase1D::NonUnimodularExpanding;
      v.published_c = c;
      v.corrected_soliton = true;
      v.corrected_c = c;
    }
  }
  return v;
}

}  // namespace liegeo
