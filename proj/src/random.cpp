#include "liegeo/random.hpp"

#include <cmath>

namespace liegeo {

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(gen_() % span);
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Vec Rng::vector(int n, double lo, double hi) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = uniform(lo, hi);
  return v;
}

Vec Rng::gaussian_vector(int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = normal();
  return v;
}

Mat Rng::gaussian_matrix(int rows, int cols) {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = normal();
  return m;
}

Mat Rng::skew(int n) {
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = uniform(-1.0, 1.0);
      m(j, i) = -m(i, j);
    }
  return m;
}

Mat Rng::orthogonal(int n) {
  const Mat g = gaussian_matrix(n, n);
  const Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

Mat Rng::spd(int n, double log10_cond) {
  const Mat q = orthogonal(n);
  Vec eigs(n);
  const double half = log10_cond / 2.0;
  for (int i = 0; i < n; ++i) eigs[i] = std::pow(10.0, uniform(-half, half));
  Mat g = q * eigs.asDiagonal() * q.transpose();
  return 0.5 * (g + g.transpose());
}

}  // namespace liegeo
