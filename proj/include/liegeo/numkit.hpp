#ifndef LIEGEO_NUMKIT_HPP
#define LIEGEO_NUMKIT_HPP

#include <Eigen/Dense>
#include <vector>

#include "liegeo/errors.hpp"

namespace liegeo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Global default tolerance; every routine takes it explicitly so the CLI
/// can override it in one place.
inline constexpr double kDefaultTolerance = 1e-9;

/// Hybrid comparison: |x - y| <= eps * max(1, |x|, |y|).  Handles both
/// near-zero residuals and O(n) curvature magnitudes with a single knob.
bool approx_equal(double x, double y, double eps);

inline bool approx_zero(double x, double eps) { return approx_equal(x, 0.0, eps); }

/// Throws NonFiniteValue when any entry is NaN or infinite.
void require_finite(double x, const char* what);
void require_finite(const Vec& v, const char* what);
void require_finite(const Mat& m, const char* what);

/// Inner product x' * G * y.
double metric_dot(const Vec& x, const Vec& y, const Mat& G);

/// Classical Gram-Schmidt with one re-orthogonalization pass, under the
/// inner product given by the SPD matrix `inner`.  Processes the vectors in
/// the given order; throws DependentInput when a residual norm drops below
/// eps.
std::vector<Vec> gram_schmidt(const std::vector<Vec>& vectors, const Mat& inner,
                              double eps);

/// Like gram_schmidt, but silently skips dependent vectors; used to
/// orthonormalize spanning sets.
std::vector<Vec> orthonormal_span(const std::vector<Vec>& vectors, const Mat& inner,
                                  double eps);

/// Reorders an orthonormal set by the index of each vector's leading
/// nonzero coordinate (stable for ties) and flips signs so that the leading
/// coordinate is positive.  Permutation + sign flips preserve orthonormality
/// under any inner product.
std::vector<Vec> canonicalize_orthonormal(std::vector<Vec> vectors, double eps);

/// One linear constraint c * lhs = rhs on the single unknown c.
struct ScalarConstraint {
  Vec lhs;
  Vec rhs;
};

struct ScalarSolution {
  enum class Kind { Unique, Underdetermined, Infeasible };
  Kind kind = Kind::Infeasible;
  double value = 0.0;     ///< the solution, when kind == Unique
  double residual = 0.0;  ///< max_k ||c*lhs_k - rhs_k||_inf at the best candidate
};

/// Decides the one-unknown system {c * lhs_k = rhs_k}.
///   Unique(c)       some lhs is nonzero and one c satisfies every
///                   constraint within eps (infinity norm);
///   Underdetermined all lhs and all rhs vanish;
///   Infeasible      otherwise.
/// Total function: never throws (mismatched dimensions aside).
ScalarSolution solve_for_scalar(const std::vector<ScalarConstraint>& constraints,
                                double eps);

struct SpdReport {
  double symmetry_residual = 0.0;
  bool symmetric = false;
  int first_nonpositive_minor = 0;  ///< 1-based index; 0 when all minors pass
  double minor_value = 0.0;         ///< value of the offending minor
  bool ok() const { return symmetric && first_nonpositive_minor == 0; }
};

/// Symmetry within eps plus positivity (> eps) of every leading principal
/// minor.
SpdReport spd_report(const Mat& G, double eps);
bool spd_check(const Mat& G, double eps);

}  // namespace liegeo

#endif
