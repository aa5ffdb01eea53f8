#include "liegeo/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace liegeo {

bool approx_equal(double x, double y, double eps) {
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= eps * scale;
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw NonFiniteValue(std::string(what) + ": non-finite value");
}

void require_finite(const Vec& v, const char* what) {
  if (!v.allFinite()) throw NonFiniteValue(std::string(what) + ": non-finite entry");
}

void require_finite(const Mat& m, const char* what) {
  if (!m.allFinite()) throw NonFiniteValue(std::string(what) + ": non-finite entry");
}

double metric_dot(const Vec& x, const Vec& y, const Mat& G) {
  if (x.size() != G.rows() || y.size() != G.cols())
    throw DimensionMismatch("metric_dot: vector/metric size mismatch");
  return x.dot(G * y);
}

namespace {

// Shared orthogonalization step: project w against the accepted vectors
// (twice, classical GS with one re-orthogonalization pass) and return the
// residual together with its G-norm.
Vec project_out(const Vec& w, const std::vector<Vec>& basis, const Mat& G) {
  Vec r = w;
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vec& b : basis) r -= metric_dot(b, r, G) * b;
  }
  return r;
}

}  // namespace

std::vector<Vec> gram_schmidt(const std::vector<Vec>& vectors, const Mat& inner,
                              double eps) {
  std::vector<Vec> out;
  out.reserve(vectors.size());
  for (const Vec& v : vectors) {
    if (v.size() != inner.rows())
      throw DimensionMismatch("gram_schmidt: vector/metric size mismatch");
    Vec r = project_out(v, out, inner);
    const double norm = std::sqrt(std::max(0.0, metric_dot(r, r, inner)));
    if (norm <= eps) throw DependentInput("gram_schmidt: dependent input vector");
    out.push_back(r / norm);
  }
  return out;
}

std::vector<Vec> orthonormal_span(const std::vector<Vec>& vectors, const Mat& inner,
                                  double eps) {
  std::vector<Vec> out;
  for (const Vec& v : vectors) {
    if (v.size() != inner.rows())
      throw DimensionMismatch("orthonormal_span: vector/metric size mismatch");
    Vec r = project_out(v, out, inner);
    const double norm = std::sqrt(std::max(0.0, metric_dot(r, r, inner)));
    if (norm <= eps) continue;
    out.push_back(r / norm);
  }
  return out;
}

std::vector<Vec> canonicalize_orthonormal(std::vector<Vec> vectors, double eps) {
  auto leading_index = [eps](const Vec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (std::abs(v[i]) > eps) return i;
    return v.size();
  };
  std::stable_sort(vectors.begin(), vectors.end(),
                   [&](const Vec& a, const Vec& b) {
                     return leading_index(a) < leading_index(b);
                   });
  for (Vec& v : vectors) {
    const Eigen::Index lead = leading_index(v);
    if (lead < v.size() && v[lead] < 0.0) v = -v;
  }
  return vectors;
}

namespace {

double constraint_residual(double c, const std::vector<ScalarConstraint>& constraints) {
  double worst = 0.0;
  for (const auto& k : constraints)
    worst = std::max(worst, (c * k.lhs - k.rhs).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace

ScalarSolution solve_for_scalar(const std::vector<ScalarConstraint>& constraints,
                                double eps) {
  ScalarSolution sol;
  double lhs_max = 0.0, rhs_max = 0.0;
  double dot = 0.0, sq = 0.0;
  for (const auto& k : constraints) {
    if (k.lhs.size() != k.rhs.size())
      throw DimensionMismatch("solve_for_scalar: lhs/rhs size mismatch");
    if (k.lhs.size() > 0) {
      lhs_max = std::max(lhs_max, k.lhs.cwiseAbs().maxCoeff());
      rhs_max = std::max(rhs_max, k.rhs.cwiseAbs().maxCoeff());
    }
    dot += k.lhs.dot(k.rhs);
    sq += k.lhs.squaredNorm();
  }

  if (lhs_max <= eps) {
    if (rhs_max <= eps) {
      sol.kind = ScalarSolution::Kind::Underdetermined;
      sol.residual = rhs_max;
    } else {
      sol.kind = ScalarSolution::Kind::Infeasible;
      sol.residual = rhs_max;
    }
    return sol;
  }

  // Candidates: the least-squares fit plus the ratio at the single
  // best-conditioned component; keep whichever minimizes the worst residual.
  std::vector<double> candidates;
  if (sq > 0.0) candidates.push_back(dot / sq);
  double best_coeff = 0.0;
  double ratio = 0.0;
  for (const auto& k : constraints) {
    for (Eigen::Index i = 0; i < k.lhs.size(); ++i) {
      if (std::abs(k.lhs[i]) > best_coeff) {
        best_coeff = std::abs(k.lhs[i]);
        ratio = k.rhs[i] / k.lhs[i];
      }
    }
  }
  if (best_coeff > eps) candidates.push_back(ratio);

  double best_c = 0.0;
  double best_res = std::numeric_limits<double>::infinity();
  for (double c : candidates) {
    const double r = constraint_residual(c, constraints);
    if (r < best_res) {
      best_res = r;
      best_c = c;
    }
  }

  sol.value = best_c;
  sol.residual = best_res;
  sol.kind = best_res <= eps ? ScalarSolution::Kind::Unique
                             : ScalarSolution::Kind::Infeasible;
  return sol;
}

SpdReport spd_report(const Mat& G, double eps) {
  SpdReport rep;
  if (G.rows() != G.cols()) {
    rep.symmetric = false;
    rep.symmetry_residual = std::numeric_limits<double>::infinity();
    return rep;
  }
  rep.symmetry_residual = (G - G.transpose()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, G.cwiseAbs().maxCoeff());
  rep.symmetric = rep.symmetry_residual <= eps * scale;
  if (!rep.symmetric) return rep;

  for (Eigen::Index k = 1; k <= G.rows(); ++k) {
    const double minor = G.topLeftCorner(k, k).determinant();
    if (!(minor > eps)) {
      rep.first_nonpositive_minor = static_cast<int>(k);
      rep.minor_value = minor;
      return rep;
    }
  }
  return rep;
}

bool spd_check(const Mat& G, double eps) { return spd_report(G, eps).ok(); }

}  // namespace liegeo
