#include "liegeo/geom.hpp"

#include <cmath>
#include <string>

namespace liegeo {

namespace {

std::vector<Vec> as_columns(const Mat& m) {
  std::vector<Vec> cols;
  cols.reserve(static_cast<size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return cols;
}

double trace_product(const Mat& a, const Mat& b) {
  // tr(a b) without forming the product.
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra, Mat metric, double eps)
    : algebra_(std::move(algebra)), metric_(std::move(metric)), eps_(eps) {
  const int n = algebra_.dim();
  if (metric_.rows() != n || metric_.cols() != n)
    throw DimensionMismatch("MetricLieAlgebra: metric dimension mismatch");
  require_finite(metric_, "metric");
  const SpdReport spd = spd_report(metric_, eps_);
  if (!spd.ok()) {
    if (!spd.symmetric)
      throw MetricNotSpd("metric is not symmetric (residual " +
                             std::to_string(spd.symmetry_residual) + ")",
                         0);
    throw MetricNotSpd("metric is not positive definite: leading principal minor " +
                           std::to_string(spd.first_nonpositive_minor) + " is " +
                           std::to_string(spd.minor_value),
                       spd.first_nonpositive_minor);
  }
  metric_llt_.compute(metric_);

  std::vector<Vec> basis;
  basis.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) basis.push_back(Vec::Unit(n, i));
  const std::vector<Vec> frame = gram_schmidt(basis, metric_, eps_);
  frame_.resize(n, n);
  for (int i = 0; i < n; ++i) frame_.col(i) = frame[static_cast<size_t>(i)];

  const bool identity_frame = (frame_ - Mat::Identity(n, n)).cwiseAbs().maxCoeff() <= eps_;
  framed_ = algebra_.change_basis(frame_, identity_frame ? algebra_.labels()
                                                         : std::vector<std::string>{});
}

double MetricLieAlgebra::norm(const Vec& x) const {
  return std::sqrt(std::max(0.0, inner(x, x)));
}

Vec MetricLieAlgebra::to_frame(const Vec& ambient) const {
  return frame_.transpose() * (metric_ * ambient);
}

Vec MetricLieAlgebra::from_frame(const Vec& coords) const { return frame_ * coords; }

Vec MetricLieAlgebra::metric_solve(const Vec& rhs) const { return metric_llt_.solve(rhs); }

Mat MetricLieAlgebra::metric_solve(const Mat& rhs) const { return metric_llt_.solve(rhs); }

Mat ad_star(const MetricLieAlgebra& M, const Vec& x) {
  // <ad(x) y, z>_G = <y, ad*(x) z>_G  =>  ad*(x) = G^{-1} ad(x)' G.
  const Mat adx = M.algebra().ad(x);
  return M.metric_solve(Mat(adx.transpose() * M.metric()));
}

Vec nabla(const MetricLieAlgebra& M, const Vec& x, const Vec& y) {
  const Vec ad_xy = M.algebra().bracket(x, y);
  const Vec adstar_xy = ad_star(M, x) * y;
  const Vec adstar_yx = ad_star(M, y) * x;
  return 0.5 * (ad_xy - adstar_xy - adstar_yx);
}

Vec curvature(const MetricLieAlgebra& M, const Vec& x, const Vec& y, const Vec& z) {
  return nabla(M, x, nabla(M, y, z)) - nabla(M, y, nabla(M, x, z)) -
         nabla(M, M.algebra().bracket(x, y), z);
}

double sectional(const MetricLieAlgebra& M, const Vec& x, const Vec& y) {
  const double xx = M.inner(x, x);
  const double yy = M.inner(y, y);
  const double xy = M.inner(x, y);
  const double denom = xx * yy - xy * xy;
  if (denom <= M.eps())
    throw DegeneratePlane("sectional: inputs span a degenerate plane");
  return M.inner(curvature(M, x, y, y), x) / denom;
}

Mat j_map(const MetricLieAlgebra& M, const Vec& x) {
  const int n = M.dim();
  Mat out(n, n);
  for (int j = 0; j < n; ++j) out.col(j) = ad_star(M, Vec::Unit(n, j)) * x;
  return out;
}

Vec mean_curvature_vector(const MetricLieAlgebra& M) {
  const int n = M.dim();
  Vec traces(n);
  for (int i = 0; i < n; ++i) traces[i] = M.algebra().ad_basis(i).trace();
  return M.metric_solve(traces);
}

RicciData ricci_trace_formula(const MetricLieAlgebra& M) {
  const int n = M.dim();
  const std::vector<Vec> frame = as_columns(M.frame());

  std::vector<Mat> ad_f, adstar_f, j_f;
  ad_f.reserve(frame.size());
  adstar_f.reserve(frame.size());
  j_f.reserve(frame.size());
  for (const Vec& f : frame) {
    ad_f.push_back(M.algebra().ad(f));
    adstar_f.push_back(ad_star(M, f));
    j_f.push_back(j_map(M, f));
  }

  const Vec H = mean_curvature_vector(M);
  const Mat ad_H = M.algebra().ad(H);

  RicciData data;
  data.mean_curvature = H;
  data.ric_form = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const size_t si = static_cast<size_t>(i), sj = static_cast<size_t>(j);
      double val = -0.5 * trace_product(ad_f[si], ad_f[sj]) -
                   0.5 * trace_product(ad_f[si], adstar_f[sj]) -
                   0.25 * trace_product(j_f[si], j_f[sj]) -
                   0.5 * M.inner(ad_H * frame[si], frame[sj]) -
                   0.5 * M.inner(ad_H * frame[sj], frame[si]);
      data.ric_form(i, j) = val;
      data.ric_form(j, i) = val;
    }
  }
  // Orthonormal frame: operator matrix coincides with the form matrix.
  data.ric_operator = data.ric_form;
  data.scalar_curv = data.ric_operator.trace();
  return data;
}

RicciData ricci_contraction(const MetricLieAlgebra& M) {
  const int n = M.dim();
  const std::vector<Vec> frame = as_columns(M.frame());

  RicciData data;
  data.mean_curvature = mean_curvature_vector(M);
  data.ric_form = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      double val = 0.0;
      for (int i = 0; i < n; ++i) {
        const size_t si = static_cast<size_t>(i);
        val += M.inner(curvature(M, frame[si], frame[static_cast<size_t>(a)],
                                 frame[static_cast<size_t>(b)]),
                       frame[si]);
      }
      data.ric_form(a, b) = val;
      data.ric_form(b, a) = val;
    }
  }
  data.ric_operator = data.ric_form;
  data.scalar_curv = data.ric_operator.trace();
  return data;
}

Mat ricci_operator_ambient(const MetricLieAlgebra& M, const RicciData& data) {
  // F orthonormal under G, so F^{-1} = F' G.
  return M.frame() * data.ric_operator * M.frame().transpose() * M.metric();
}

}  // namespace liegeo
