#include "liegeo/decomp.hpp"

#include <algorithm>
#include <cmath>

namespace liegeo {

namespace {

double skew_defect(const Mat& f) {
  if (f.size() == 0) return 0.0;
  return (f + f.transpose()).cwiseAbs().maxCoeff();
}

std::vector<std::string> synthetic_labels(int e_count, int m) {
  std::vector<std::string> labels;
  if (e_count == 1) {
    labels.push_back("e");
  } else {
    labels.push_back("e1");
    labels.push_back("e2");
  }
  for (int j = 1; j <= m; ++j) labels.push_back("g" + std::to_string(j));
  return labels;
}

}  // namespace

void DerivedDecomposition::finalize(double eps) {
  eps_ = eps;
  skew_residual_ = 0.0;
  if (kind_ == DecompKind::OneDim) {
    skew_residual_ = skew_defect(f_);
  } else {
    skew_residual_ = std::max(skew_defect(f1_), skew_defect(f2_));
  }
  if (skew_residual_ > eps_ * 1e3)
    throw ClosureViolation("decomposition maps are not skew-adjoint (residual " +
                           std::to_string(skew_residual_) + ")");
}

DerivedDecomposition DerivedDecomposition::make_one_dim(Vec a, Mat f, double eps) {
  DerivedDecomposition d;
  d.kind_ = DecompKind::OneDim;
  d.m_ = static_cast<int>(a.size());
  d.n_ = d.m_ + 1;
  if (f.rows() != d.m_ || f.cols() != d.m_)
    throw DimensionMismatch("make_one_dim: f must be m x m");
  require_finite(a, "a");
  require_finite(f, "f");
  d.a_ = std::move(a);
  d.f_ = std::move(f);
  d.frame_ = Mat::Identity(d.n_, d.n_);
  d.to_frame_ = d.frame_;
  d.metric_ = Mat::Identity(d.n_, d.n_);
  d.labels_ = synthetic_labels(1, d.m_);
  d.finalize(eps);
  return d;
}

DerivedDecomposition DerivedDecomposition::make_two_dim(Vec a1, Vec a2, Vec b1, Vec b2,
                                                        Mat f1, Mat f2, double eps) {
  DerivedDecomposition d;
  d.kind_ = DecompKind::TwoDim;
  d.m_ = static_cast<int>(a1.size());
  d.n_ = d.m_ + 2;
  if (a2.size() != d.m_ || b1.size() != d.m_ || b2.size() != d.m_)
    throw DimensionMismatch("make_two_dim: invariant vector sizes differ");
  if (f1.rows() != d.m_ || f1.cols() != d.m_ || f2.rows() != d.m_ || f2.cols() != d.m_)
    throw DimensionMismatch("make_two_dim: f1/f2 must be m x m");
  d.a1_ = std::move(a1);
  d.a2_ = std::move(a2);
  d.b1_ = std::move(b1);
  d.b2_ = std::move(b2);
  d.f1_ = std::move(f1);
  d.f2_ = std::move(f2);
  d.frame_ = Mat::Identity(d.n_, d.n_);
  d.to_frame_ = d.frame_;
  d.metric_ = Mat::Identity(d.n_, d.n_);
  d.labels_ = synthetic_labels(2, d.m_);
  d.finalize(eps);
  return d;
}

void DerivedDecomposition::require_kind(DecompKind kind) const {
  if (kind_ != kind) throw WrongKind("operation requires the other decomposition kind");
}

const Vec& DerivedDecomposition::a() const {
  require_kind(DecompKind::OneDim);
  return a_;
}
const Mat& DerivedDecomposition::f() const {
  require_kind(DecompKind::OneDim);
  return f_;
}
const Vec& DerivedDecomposition::a1() const {
  require_kind(DecompKind::TwoDim);
  return a1_;
}
const Vec& DerivedDecomposition::a2() const {
  require_kind(DecompKind::TwoDim);
  return a2_;
}
const Vec& DerivedDecomposition::b1() const {
  require_kind(DecompKind::TwoDim);
  return b1_;
}
const Vec& DerivedDecomposition::b2() const {
  require_kind(DecompKind::TwoDim);
  return b2_;
}
const Mat& DerivedDecomposition::f1() const {
  require_kind(DecompKind::TwoDim);
  return f1_;
}
const Mat& DerivedDecomposition::f2() const {
  require_kind(DecompKind::TwoDim);
  return f2_;
}

Vec DerivedDecomposition::gamma_to_ambient(const Vec& gamma_coords) const {
  if (gamma_coords.size() != m_)
    throw DimensionMismatch("gamma_to_ambient: wrong Gamma dimension");
  return frame_.rightCols(m_) * gamma_coords;
}

Vec DerivedDecomposition::ambient_to_gamma(const Vec& ambient) const {
  return to_frame_.bottomRows(m_) * ambient;
}

DerivedDecomposition decompose(const MetricLieAlgebra& M) {
  const double eps = M.eps();
  const int n = M.dim();
  const LieAlgebra& L = M.algebra();
  const Mat& G = M.metric();

  const DerivedInfo derived = L.derived_subalgebra(eps);
  if (derived.dim1 != 1 && derived.dim1 != 2)
    throw UnsupportedDerivedDim("derived algebra has dimension " +
                                std::to_string(derived.dim1) +
                                "; only 1 and 2 are supported");
  const int p = derived.dim1;
  const int m = n - p;

  // Metric-orthonormal basis of g', canonicalized so reports are
  // reproducible and match the usual published labelling.
  std::vector<Vec> e_basis =
      canonicalize_orthonormal(gram_schmidt(derived.basis1, G, eps), eps);

  DerivedDecomposition d;
  d.kind_ = p == 1 ? DecompKind::OneDim : DecompKind::TwoDim;
  d.n_ = n;
  d.m_ = m;
  d.metric_ = G;

  if (p == 2) {
    const Vec inner_bracket = L.bracket(e_basis[0], e_basis[1]);
    if (inner_bracket.cwiseAbs().maxCoeff() > eps)
      throw NonAbelianDerived("two-dimensional derived algebra is not abelian");
  }

  // Complete the frame: project the standard basis onto the orthogonal
  // complement of g', keeping input order.
  std::vector<Vec> chain = e_basis;
  std::vector<Vec> gamma_basis;
  for (int i = 0; i < n && static_cast<int>(gamma_basis.size()) < m; ++i) {
    std::vector<Vec> trial = chain;
    trial.push_back(Vec::Unit(n, i));
    try {
      trial = gram_schmidt(trial, G, eps);
    } catch (const DependentInput&) {
      continue;
    }
    chain = trial;
    gamma_basis.push_back(chain.back());
  }
  if (static_cast<int>(gamma_basis.size()) != m)
    throw ClosureViolation("failed to complete the orthogonal complement basis");

  d.frame_.resize(n, n);
  for (int i = 0; i < p; ++i) d.frame_.col(i) = e_basis[static_cast<size_t>(i)];
  for (int j = 0; j < m; ++j) d.frame_.col(p + j) = gamma_basis[static_cast<size_t>(j)];
  d.to_frame_ = d.frame_.transpose() * G;

  // Frame labels: reuse input labels when a frame vector is (signed) equal
  // to a standard basis vector.
  d.labels_.assign(static_cast<size_t>(n), std::string());
  for (int c = 0; c < n; ++c) {
    const Vec& v = d.frame_.col(c);
    std::string label;
    for (int i = 0; i < n; ++i) {
      if (std::abs(std::abs(v[i]) - 1.0) <= eps &&
          v.cwiseAbs().sum() - std::abs(v[i]) <= eps) {
        label = (v[i] > 0 ? "" : "-") + L.labels()[static_cast<size_t>(i)];
        break;
      }
    }
    if (label.empty())
      label = c < p ? ("e" + std::to_string(c + 1)) : ("g" + std::to_string(c - p + 1));
    d.labels_[static_cast<size_t>(c)] = label;
  }
  if (p == 1) d.labels_[0] = "e";

  // Extract the invariant vectors and skew maps; verify along the way that
  // every bracket stays inside g'.
  auto check_in_derived = [&](const Vec& w, const Vec& projected) {
    const Vec residual = w - projected;
    const double r = std::sqrt(std::max(0.0, metric_dot(residual, residual, G)));
    if (r > eps * 1e3)
      throw ClosureViolation("bracket leaves the derived algebra (residual " +
                             std::to_string(r) + ")");
  };

  if (p == 1) {
    const Vec& e = e_basis[0];
    Vec a(m);
    for (int j = 0; j < m; ++j) {
      const Vec w = L.bracket(gamma_basis[static_cast<size_t>(j)], e);
      a[j] = metric_dot(w, e, G);
      check_in_derived(w, a[j] * e);
    }
    Mat f = Mat::Zero(m, m);
    for (int j = 0; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        const Vec w =
            L.bracket(gamma_basis[static_cast<size_t>(j)], gamma_basis[static_cast<size_t>(k)]);
        const double B_jk = metric_dot(w, e, G);
        check_in_derived(w, B_jk * e);
        // <f(g_j), g_k> = B(j,k)
        f(k, j) = B_jk;
        f(j, k) = -B_jk;
      }
    }
    d.a_ = std::move(a);
    d.f_ = std::move(f);
  } else {
    const Vec& e1 = e_basis[0];
    const Vec& e2 = e_basis[1];
    Vec a1(m), a2(m), b1(m), b2(m);
    for (int j = 0; j < m; ++j) {
      const Vec w1 = L.bracket(gamma_basis[static_cast<size_t>(j)], e1);
      a1[j] = metric_dot(w1, e1, G);
      a2[j] = metric_dot(w1, e2, G);
      check_in_derived(w1, a1[j] * e1 + a2[j] * e2);
      const Vec w2 = L.bracket(gamma_basis[static_cast<size_t>(j)], e2);
      b1[j] = metric_dot(w2, e1, G);
      b2[j] = metric_dot(w2, e2, G);
      check_in_derived(w2, b1[j] * e1 + b2[j] * e2);
    }
    Mat f1 = Mat::Zero(m, m), f2 = Mat::Zero(m, m);
    for (int j = 0; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        const Vec w =
            L.bracket(gamma_basis[static_cast<size_t>(j)], gamma_basis[static_cast<size_t>(k)]);
        const double B1_jk = metric_dot(w, e1, G);
        const double B2_jk = metric_dot(w, e2, G);
        check_in_derived(w, B1_jk * e1 + B2_jk * e2);
        f1(k, j) = B1_jk;
        f1(j, k) = -B1_jk;
        f2(k, j) = B2_jk;
        f2(j, k) = -B2_jk;
      }
    }
    d.a1_ = std::move(a1);
    d.a2_ = std::move(a2);
    d.b1_ = std::move(b1);
    d.b2_ = std::move(b2);
    d.f1_ = std::move(f1);
    d.f2_ = std::move(f2);
  }

  d.finalize(eps);
  return d;
}

LieAlgebra reconstruct_brackets(const DerivedDecomposition& d) {
  const int n = d.ambient_dim();
  const int m = d.gamma_dim();
  const int p = d.derived_dim();
  std::vector<BracketTerm> terms;

  auto e_unit = [&](int which) { return Vec::Unit(n, which); };

  if (d.kind() == DecompKind::OneDim) {
    const Vec& a = d.a();
    const Mat& f = d.f();
    for (int j = 0; j < m; ++j) {
      // [e, g_j] = -<a, g_j> e
      if (a[j] != 0.0) terms.push_back({0, p + j, Vec(-a[j] * e_unit(0))});
      for (int k = j + 1; k < m; ++k) {
        const double B_jk = f(k, j);  // <f(g_j), g_k>
        if (B_jk != 0.0) terms.push_back({p + j, p + k, Vec(B_jk * e_unit(0))});
      }
    }
  } else {
    const Vec &a1 = d.a1(), &a2 = d.a2(), &b1 = d.b1(), &b2 = d.b2();
    const Mat &f1 = d.f1(), &f2 = d.f2();
    for (int j = 0; j < m; ++j) {
      const Vec from_e1 = -(a1[j] * e_unit(0) + a2[j] * e_unit(1));
      if (from_e1.cwiseAbs().maxCoeff() != 0.0) terms.push_back({0, p + j, from_e1});
      const Vec from_e2 = -(b1[j] * e_unit(0) + b2[j] * e_unit(1));
      if (from_e2.cwiseAbs().maxCoeff() != 0.0) terms.push_back({1, p + j, from_e2});
      for (int k = j + 1; k < m; ++k) {
        const Vec value = f1(k, j) * e_unit(0) + f2(k, j) * e_unit(1);
        if (value.cwiseAbs().maxCoeff() != 0.0) terms.push_back({p + j, p + k, value});
      }
    }
  }
  return LieAlgebra(n, terms, d.frame_labels());
}

UnimodularityWitness unimodularity_witness(const DerivedDecomposition& d, double eps) {
  UnimodularityWitness w;
  Vec gamma_witness;
  if (d.kind() == DecompKind::OneDim) {
    gamma_witness = d.a();
  } else {
    gamma_witness = d.a1() + d.b2();
  }
  w.witness = d.gamma_to_ambient(gamma_witness);
  w.unimodular = gamma_witness.norm() <= eps;
  return w;
}

}  // namespace liegeo
