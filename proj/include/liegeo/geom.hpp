#ifndef LIEGEO_GEOM_HPP
#define LIEGEO_GEOM_HPP

#include "liegeo/liealg.hpp"

namespace liegeo {

/// Lie algebra paired with an SPD inner product.  A G-orthonormal frame is
/// built once by Gram-Schmidt over the input basis in input order; matrices
/// reported "in the frame" refer to it.  All vectors passed to and returned
/// by the geometry operations below live in input-basis coordinates.
class MetricLieAlgebra {
public:
  MetricLieAlgebra(LieAlgebra algebra, Mat metric, double eps = kDefaultTolerance);

  const LieAlgebra& algebra() const { return algebra_; }
  const Mat& metric() const { return metric_; }
  double eps() const { return eps_; }
  int dim() const { return algebra_.dim(); }

  /// Frame matrix: column i is the i-th frame vector in input coordinates.
  const Mat& frame() const { return frame_; }
  /// Structure constants rewritten in the frame basis.
  const LieAlgebra& framed_algebra() const { return framed_; }

  double inner(const Vec& x, const Vec& y) const { return metric_dot(x, y, metric_); }
  double norm(const Vec& x) const;

  /// Coordinates of an input-basis vector in the frame (= F' G v).
  Vec to_frame(const Vec& ambient) const;
  Vec from_frame(const Vec& coords) const;

  /// Solves G x = rhs.
  Vec metric_solve(const Vec& rhs) const;
  Mat metric_solve(const Mat& rhs) const;

private:
  LieAlgebra algebra_;
  Mat metric_;
  Mat frame_;
  Eigen::LLT<Mat> metric_llt_;
  LieAlgebra framed_;
  double eps_;
};

/// Metric adjoint of ad(x): <ad(x) y, z> = <y, ad_star(x) z> for all y, z.
Mat ad_star(const MetricLieAlgebra& M, const Vec& x);

/// Levi-Civita connection at the identity for left-invariant fields:
/// nabla_x y = (1/2)(ad_x y - ad*_x y - ad*_y x).
Vec nabla(const MetricLieAlgebra& M, const Vec& x, const Vec& y);

/// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z.
Vec curvature(const MetricLieAlgebra& M, const Vec& x, const Vec& y, const Vec& z);

/// <R(x,y)y, x> / (|x|^2 |y|^2 - <x,y>^2); throws DegeneratePlane when the
/// denominator is below tolerance.
double sectional(const MetricLieAlgebra& M, const Vec& x, const Vec& y);

/// The linear map y -> ad*_y x.
Mat j_map(const MetricLieAlgebra& M, const Vec& x);

/// Unique H with <H, x> = tr(ad x) for all x; vanishes iff unimodular.
Vec mean_curvature_vector(const MetricLieAlgebra& M);

struct RicciData {
  Mat ric_form;      ///< symmetric bilinear form in the frame
  Mat ric_operator;  ///< Ricci operator, frame coordinates
  double scalar_curv = 0.0;
  Vec mean_curvature;  ///< H, input coordinates
};

/// Ricci tensor from the five-term trace formula
/// ric(x,y) = -1/2 tr(ad_x ad_y) - 1/2 tr(ad_x ad*_y) - 1/4 tr(J_x J_y)
///            - 1/2 <ad_H x, y> - 1/2 <ad_H y, x>,
/// evaluated on the frame.
RicciData ricci_trace_formula(const MetricLieAlgebra& M);

/// Independent route: ric(x,y) = sum_i <R(f_i, x) y, f_i> over the frame.
RicciData ricci_contraction(const MetricLieAlgebra& M);

/// Ricci operator pushed back to input-basis coordinates.
Mat ricci_operator_ambient(const MetricLieAlgebra& M, const RicciData& data);

}  // namespace liegeo

#endif
