#include "liegeo/liealg.hpp"

#include <algorithm>
#include <cmath>

namespace liegeo {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back("X" + std::to_string(i));
  return labels;
}

LieAlgebra::LieAlgebra(int dim, const std::vector<BracketTerm>& brackets,
                       std::vector<std::string> labels) {
  if (dim <= 0) throw BadParameters("LieAlgebra: dimension must be positive");
  n_ = dim;
  comps_.assign(static_cast<size_t>(n_), Mat::Zero(n_, n_));
  for (const auto& term : brackets) {
    if (term.x < 0 || term.y < 0 || term.x >= n_ || term.y >= n_)
      throw BadParameters("LieAlgebra: bracket index out of range");
    if (term.x >= term.y)
      throw BadParameters("LieAlgebra: bracket terms must satisfy x < y");
    if (term.value.size() != n_)
      throw DimensionMismatch("LieAlgebra: bracket value has wrong dimension");
    require_finite(term.value, "LieAlgebra bracket value");
    for (int k = 0; k < n_; ++k) {
      comps_[static_cast<size_t>(k)](term.x, term.y) += term.value[k];
      comps_[static_cast<size_t>(k)](term.y, term.x) -= term.value[k];
    }
  }
  labels_ = labels.empty() ? default_labels(n_) : std::move(labels);
  if (static_cast<int>(labels_.size()) != n_)
    throw BadParameters("LieAlgebra: label count does not match dimension");
}

LieAlgebra LieAlgebra::from_structure_tensor(std::vector<Mat> components,
                                             std::vector<std::string> labels,
                                             double eps) {
  LieAlgebra L;
  L.n_ = static_cast<int>(components.size());
  if (L.n_ == 0) throw BadParameters("LieAlgebra: empty structure tensor");
  for (const Mat& c : components) {
    if (c.rows() != L.n_ || c.cols() != L.n_)
      throw DimensionMismatch("LieAlgebra: structure component has wrong shape");
    require_finite(c, "LieAlgebra structure component");
    const double asym = (c + c.transpose()).cwiseAbs().maxCoeff();
    if (asym > eps * std::max(1.0, c.cwiseAbs().maxCoeff()))
      throw BadParameters("LieAlgebra: structure tensor not antisymmetric");
  }
  L.comps_ = std::move(components);
  L.labels_ = labels.empty() ? default_labels(L.n_) : std::move(labels);
  if (static_cast<int>(L.labels_.size()) != L.n_)
    throw BadParameters("LieAlgebra: label count does not match dimension");
  return L;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_)
    throw DimensionMismatch("bracket: vector dimension mismatch");
  Vec out(n_);
  for (int k = 0; k < n_; ++k) out[k] = x.dot(comps_[static_cast<size_t>(k)] * y);
  return out;
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec out(n_);
  for (int k = 0; k < n_; ++k) out[k] = comps_[static_cast<size_t>(k)](i, j);
  return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
  if (x.size() != n_) throw DimensionMismatch("ad: vector dimension mismatch");
  Mat out(n_, n_);
  for (int k = 0; k < n_; ++k)
    out.row(k) = x.transpose() * comps_[static_cast<size_t>(k)];
  return out;
}

Mat LieAlgebra::ad_basis(int i) const {
  Mat out(n_, n_);
  for (int k = 0; k < n_; ++k) out.row(k) = comps_[static_cast<size_t>(k)].row(i);
  return out;
}

ValidationReport LieAlgebra::validate() const {
  ValidationReport rep;
  for (int k = 0; k < n_; ++k) {
    const Mat& c = comps_[static_cast<size_t>(k)];
    rep.antisymmetry_residual =
        std::max(rep.antisymmetry_residual, (c + c.transpose()).cwiseAbs().maxCoeff());
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      for (int k = j + 1; k < n_; ++k) {
        const Vec cycle = bracket(Vec::Unit(n_, i), bracket_basis(j, k)) +
                          bracket(Vec::Unit(n_, j), bracket_basis(k, i)) +
                          bracket(Vec::Unit(n_, k), bracket_basis(i, j));
        rep.jacobi_residual = std::max(rep.jacobi_residual, cycle.cwiseAbs().maxCoeff());
      }
    }
  }
  return rep;
}

DerivedInfo LieAlgebra::derived_subalgebra(double eps) const {
  std::vector<Vec> brackets;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Vec b = bracket_basis(i, j);
      if (b.cwiseAbs().maxCoeff() > eps) brackets.push_back(std::move(b));
    }
  DerivedInfo info;
  info.basis1 = canonicalize_orthonormal(
      orthonormal_span(brackets, Mat::Identity(n_, n_), eps), eps);
  info.dim1 = static_cast<int>(info.basis1.size());
  return info;
}

DerivationCheck LieAlgebra::is_derivation(const Mat& D, double eps) const {
  if (D.rows() != n_ || D.cols() != n_)
    throw DimensionMismatch("is_derivation: matrix dimension mismatch");
  DerivationCheck check;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const Vec lhs = D * bracket_basis(i, j);
      const Vec rhs = bracket(D.col(i), Vec::Unit(n_, j)) +
                      bracket(Vec::Unit(n_, i), D.col(j));
      check.residual = std::max(check.residual, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  check.pass = check.residual <= eps;
  return check;
}

LieAlgebra LieAlgebra::change_basis(const Mat& P, std::vector<std::string> labels) const {
  if (P.rows() != n_ || P.cols() != n_)
    throw DimensionMismatch("change_basis: matrix dimension mismatch");
  const Eigen::PartialPivLU<Mat> lu(P);
  std::vector<Mat> comps(static_cast<size_t>(n_), Mat::Zero(n_, n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const Vec value = lu.solve(bracket(P.col(i), P.col(j)));
      for (int k = 0; k < n_; ++k) {
        comps[static_cast<size_t>(k)](i, j) = value[k];
        comps[static_cast<size_t>(k)](j, i) = -value[k];
      }
    }
  }
  LieAlgebra out;
  out.n_ = n_;
  out.comps_ = std::move(comps);
  out.labels_ = labels.empty() ? default_labels(n_) : std::move(labels);
  return out;
}

bool LieAlgebra::is_abelian(double eps) const {
  for (const Mat& c : comps_)
    if (c.cwiseAbs().maxCoeff() > eps) return false;
  return true;
}

}  // namespace liegeo
