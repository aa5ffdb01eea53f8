#ifndef LIEGEO_ONEDIM_HPP
#define LIEGEO_ONEDIM_HPP

#include <map>
#include <string>

#include "liegeo/decomp.hpp"

namespace liegeo {

/// Closed-form Levi-Civita connection for a one-dimensional derived algebra,
/// evaluated bilinearly in decomposition-frame coordinates (e-component
/// first, then Gamma):
///   nabla_e e = a,  nabla_e u = -1/2 f(u) - <u,a> e,
///   nabla_u e = -1/2 f(u),  nabla_u v = 1/2 <f(u),v> e.
Vec connection_1d(const DerivedDecomposition& d, const Vec& x, const Vec& y);

/// K(u, e) = 1/4 |f(u)|^2 - <a,u>^2 for a unit u in Gamma coordinates.
double sectional_1d(const DerivedDecomposition& d, const Vec& u);
/// K(u, v) = -3/4 <f(u), v>^2 for an orthonormal pair in Gamma coordinates.
double sectional_1d(const DerivedDecomposition& d, const Vec& u, const Vec& v);

struct OneDimRicci {
  Vec ric_e;      ///< Ric(e), decomposition-frame coordinates
  Mat ric_gamma;  ///< column j = Ric(g_j), decomposition-frame coordinates (n x m)
  Mat ric_operator;  ///< full operator on the decomposition frame (n x n)
};

/// Ric(e) = -f(a) - (1/4 tr(f^2) + |a|^2) e and
/// Ric(u) = 1/2 f^2(u) - <u,a> a + <f(u),a> e.
OneDimRicci ricci_1d(const DerivedDecomposition& d);

enum class ClosedFormCase1D { UnimodularSteady, NonUnimodularExpanding, None };

struct ClosedFormVerdict1D {
  /// Published classification, taken literally:
  ///  (i)  a = 0 and f^3 = (-1/4 tr f^2) f, a steady soliton (c = 0);
  ///  (ii) a != 0, a in ker f, c = -|a|^2, f^3 = -(2|a|^2 + 1/4 tr f^2) f.
  ClosedFormCase1D published_case = ClosedFormCase1D::None;
  double published_c = 0.0;

  /// Corrected unimodular branch: a = 0 and some c with
  /// f^3 = (c - 1/4 tr f^2) f; coincides with (ii) when a != 0.
  bool corrected_soliton = false;
  double corrected_c = 0.0;

  std::map<std::string, double> residuals;
};

ClosedFormVerdict1D soliton_classify_1d(const DerivedDecomposition& d, double eps);

}  // namespace liegeo

#endif
