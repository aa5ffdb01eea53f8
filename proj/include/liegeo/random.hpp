#ifndef LIEGEO_RANDOM_HPP
#define LIEGEO_RANDOM_HPP

#include <cstdint>
#include <random>

#include "liegeo/numkit.hpp"

namespace liegeo {

/// Seeded generator with portable conversions (the mt19937_64 stream is
/// pinned by the standard; the uniform/normal mappings below avoid the
/// implementation-defined std distributions).
class Rng {
public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  double uniform();  ///< [0, 1)
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  ///< inclusive bounds
  double normal();                  ///< Box-Muller

  Vec vector(int n, double lo = -1.0, double hi = 1.0);
  Vec gaussian_vector(int n);
  Mat gaussian_matrix(int rows, int cols);
  Mat skew(int n);

  /// Haar-ish orthogonal matrix (QR of a Gaussian matrix, signs fixed).
  Mat orthogonal(int n);

  /// SPD matrix with condition number at most 10^log10_cond.
  Mat spd(int n, double log10_cond);

private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace liegeo

#endif
