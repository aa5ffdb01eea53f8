#ifndef LIEGEO_LIEALG_HPP
#define LIEGEO_LIEALG_HPP

#include <string>
#include <vector>

#include "liegeo/numkit.hpp"

namespace liegeo {

/// One bracket relation [b_x, b_y] = value, given for x < y (0-based).
struct BracketTerm {
  int x = 0;
  int y = 0;
  Vec value;
};

struct ValidationReport {
  double antisymmetry_residual = 0.0;
  double jacobi_residual = 0.0;
};

struct DerivedInfo {
  int dim1 = 0;
  std::vector<Vec> basis1;  ///< Euclidean-orthonormal span of all brackets
};

struct DerivationCheck {
  bool pass = false;
  double residual = 0.0;
};

/// Real Lie algebra given by dense structure constants over a fixed basis
/// b_1..b_n: [b_i, b_j] = sum_k C[i][j][k] b_k.  Immutable after
/// construction; the constructor performs the antisymmetric completion of
/// bracket terms supplied for i < j only.
class LieAlgebra {
public:
  /// Builds from sparse bracket terms (x < y required).  The Jacobi identity
  /// is *not* enforced here; see validate().
  LieAlgebra(int dim, const std::vector<BracketTerm>& brackets,
             std::vector<std::string> labels = {});

  /// Builds from the full structure tensor: components[k](i,j) is the
  /// coefficient of b_k in [b_i, b_j].  Must be antisymmetric in (i,j).
  static LieAlgebra from_structure_tensor(std::vector<Mat> components,
                                          std::vector<std::string> labels = {},
                                          double eps = kDefaultTolerance);

  int dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [x, y]; bilinear antisymmetric evaluation of the structure constants.
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_basis(int i, int j) const;

  /// Matrix of ad(x): column j is [x, b_j].
  Mat ad(const Vec& x) const;
  Mat ad_basis(int i) const;

  /// Residuals of the defining identities; the caller decides pass/fail.
  ValidationReport validate() const;

  /// Euclidean-orthonormal basis of the span of all brackets, in a
  /// deterministic canonical order.
  DerivedInfo derived_subalgebra(double eps) const;

  /// Residual of D[b_i,b_j] - [D b_i, b_j] - [b_i, D b_j] over basis pairs.
  DerivationCheck is_derivation(const Mat& D, double eps) const;

  /// Structure constants in the basis p_j = sum_i P(i,j) b_i.
  LieAlgebra change_basis(const Mat& P, std::vector<std::string> labels = {}) const;

  /// component k of the structure tensor; (i,j) entry is C[i][j][k].
  const Mat& structure_component(int k) const { return comps_[static_cast<size_t>(k)]; }

  bool is_abelian(double eps) const;

private:
  friend class MetricLieAlgebra;  // needs an empty slot before the frame exists

  LieAlgebra() = default;

  int n_ = 0;
  std::vector<Mat> comps_;  ///< comps_[k](i,j) = C[i][j][k]
  std::vector<std::string> labels_;
};

/// Default basis labels X1..Xn.
std::vector<std::string> default_labels(int n);

}  // namespace liegeo

#endif
