#ifndef LIEGEO_DECOMP_HPP
#define LIEGEO_DECOMP_HPP

#include <string>
#include <vector>

#include "liegeo/geom.hpp"

namespace liegeo {

enum class DecompKind { OneDim, TwoDim };

/// Orthogonal splitting g = g' (+) Gamma for derived algebras of dimension
/// 1 or 2, together with the invariant vectors and skew-adjoint maps that
/// encode every bracket:
///
///   OneDim:  [u, e]  = <a, u> e,                [u, v] = <f(u), v> e
///   TwoDim:  [u, e1] = <a1,u> e1 + <a2,u> e2,
///            [u, e2] = <b1,u> e1 + <b2,u> e2,   [u, v] = <f1(u),v> e1 + <f2(u),v> e2
///
/// The invariant vectors and maps are stored in coordinates of the
/// orthonormal Gamma basis, so the plain dot product realizes <.,.> there.
/// Decomposition-frame coordinates list the e-components first, then the
/// Gamma components.
class DerivedDecomposition {
public:
  /// Synthetic one-dimensional instance over standard coordinates (tests,
  /// closed-form exploration).  a has Gamma dimension m, f is m x m
  /// skew-symmetric.
  static DerivedDecomposition make_one_dim(Vec a, Mat f, double eps = kDefaultTolerance);
  /// Synthetic two-dimensional instance.
  static DerivedDecomposition make_two_dim(Vec a1, Vec a2, Vec b1, Vec b2, Mat f1,
                                           Mat f2, double eps = kDefaultTolerance);

  DecompKind kind() const { return kind_; }
  int ambient_dim() const { return n_; }
  int gamma_dim() const { return m_; }
  int derived_dim() const { return n_ - m_; }
  double eps() const { return eps_; }

  /// Columns: e-basis then Gamma basis, input-basis coordinates; the whole
  /// matrix is a G-orthonormal frame.
  const Mat& frame() const { return frame_; }
  const Mat& metric() const { return metric_; }
  const std::vector<std::string>& frame_labels() const { return labels_; }

  Vec to_frame(const Vec& ambient) const { return to_frame_ * ambient; }
  Vec from_frame(const Vec& coords) const { return frame_ * coords; }

  /// e (OneDim) or e1/e2 (TwoDim) in input coordinates.
  Vec e_vector(int which = 0) const { return frame_.col(which); }
  Vec gamma_vector(int j) const { return frame_.col(derived_dim() + j); }

  // OneDim accessors (throw WrongKind otherwise).
  const Vec& a() const;
  const Mat& f() const;

  // TwoDim accessors (throw WrongKind otherwise).
  const Vec& a1() const;
  const Vec& a2() const;
  const Vec& b1() const;
  const Vec& b2() const;
  const Mat& f1() const;
  const Mat& f2() const;

  /// Max deviation of f (f1, f2) from skew-symmetry in Gamma coordinates.
  double skew_residual() const { return skew_residual_; }

  /// Gamma-coordinate vector lifted to input coordinates.
  Vec gamma_to_ambient(const Vec& gamma_coords) const;
  /// Frame coordinates of an ambient vector restricted to Gamma.
  Vec ambient_to_gamma(const Vec& ambient) const;

  void require_kind(DecompKind kind) const;

private:
  friend DerivedDecomposition decompose(const MetricLieAlgebra& M);

  DerivedDecomposition() = default;
  void finalize(double eps);  // shared invariant checks

  DecompKind kind_ = DecompKind::OneDim;
  int n_ = 0;  ///< ambient dimension
  int m_ = 0;  ///< Gamma dimension
  Mat frame_;
  Mat to_frame_;
  Mat metric_;
  std::vector<std::string> labels_;
  Vec a_, a1_, a2_, b1_, b2_;
  Mat f_, f1_, f2_;
  double skew_residual_ = 0.0;
  double eps_ = kDefaultTolerance;
};

/// Builds the decomposition of M; requires dim g' in {1, 2} and, in the
/// two-dimensional case, an abelian derived algebra.
DerivedDecomposition decompose(const MetricLieAlgebra& M);

/// Lie algebra over the decomposition frame whose structure constants are
/// regenerated from the stored invariants; round-trips the original within
/// tolerance.
LieAlgebra reconstruct_brackets(const DerivedDecomposition& d);

struct UnimodularityWitness {
  bool unimodular = false;
  Vec witness;  ///< a (OneDim) or a1 + b2 (TwoDim), input coordinates
};

UnimodularityWitness unimodularity_witness(const DerivedDecomposition& d, double eps);

}  // namespace liegeo

#endif
