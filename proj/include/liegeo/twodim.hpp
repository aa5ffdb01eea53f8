#ifndef LIEGEO_TWODIM_HPP
#define LIEGEO_TWODIM_HPP

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "liegeo/decomp.hpp"

namespace liegeo {

/// Scalars, vectors and maps assembled from the decomposition data that
/// express the Ricci transformation:
///   Ric(e1) = A1 e1 + B1 e2 + E1,
///   Ric(e2) = A2 e1 + B2 e2 + E2,
///   Ric(u)  = <u,E1> e1 + <u,E2> e2 + E_of(u).
struct RicciCoefficients {
  double A1 = 0.0, B1 = 0.0, A2 = 0.0, B2 = 0.0;
  Vec E1, E2;    ///< Gamma coordinates
  Vec A_of, B_of;  ///< Gamma-vector representatives of the functionals A(u), B(u)
  Mat E_of;      ///< self-adjoint map on Gamma
};

RicciCoefficients ricci_coefficients(const DerivedDecomposition& d);

/// Nine-case bilinear connection table in decomposition-frame coordinates
/// (e1, e2 components first, then Gamma).
Vec connection_2d(const DerivedDecomposition& d, const Vec& x, const Vec& y);

// Plane selectors for the closed-form sectional curvature.
struct PlaneE1E2 {};
struct PlaneE1U {
  Vec u;  ///< unit vector, Gamma coordinates
};
struct PlaneE2U {
  Vec u;
};
struct PlaneGamma {
  Vec u, v;  ///< orthonormal pair, Gamma coordinates
};
using SectionPlane = std::variant<PlaneE1E2, PlaneE1U, PlaneE2U, PlaneGamma>;

double sectional_2d(const DerivedDecomposition& d, const SectionPlane& plane);

struct TwoDimRicci {
  Vec ric_e1, ric_e2;  ///< decomposition-frame coordinates
  Mat ric_gamma;       ///< column j = Ric(g_j) (n x m)
  Mat ric_operator;    ///< full operator on the decomposition frame
};

TwoDimRicci ricci_2d(const DerivedDecomposition& d);

/// The eleven-equation feasibility system for the soliton constant c.
/// Equations quantified over u (or pairs u, v) are evaluated on the Gamma
/// basis; everything in sight is (bi)linear, so basis evaluation is
/// exhaustive.
struct SolitonSystemResiduals {
  std::array<double, 11> eq{};  ///< max |LHS| per equation
  double max() const;
};

SolitonSystemResiduals soliton_system_residuals(const DerivedDecomposition& d, double c);

struct CandidateC {
  int equation = 0;  ///< 1-based equation number
  std::string where;  ///< basis vector(s) the instance was evaluated on
  double c = 0.0;
};

struct SolitonSystemSolution {
  std::vector<CandidateC> candidates;
  bool consistent = false;
  double c = 0.0;         ///< consistent value (0 when unconstrained)
  double residual = 0.0;  ///< max residual at the reported c
};

/// Every equation instance is affine in c; collects the per-instance
/// candidates and decides whether a single c satisfies the whole system.
SolitonSystemSolution soliton_system_solve(const DerivedDecomposition& d, double eps);

/// Residuals of the two operator equations characterizing solitons in the
/// 2-step nilpotent case (a1 = a2 = b1 = b2 = 0), with S = f1^2 + f2^2:
///   c f1 = 1/4 tr(f1^2) f1 + 1/4 tr(f1 f2) f2 + 1/2 f1 S + 1/2 S f1
/// and the f2 twin.  `published` reports the residual of the asymmetric
/// variant (full-weight S f1 in the first equation).
struct NilpotentSolitonResiduals {
  double symmetrized = 0.0;
  double published = 0.0;
};

NilpotentSolitonResiduals nilpotent_soliton_residuals(const DerivedDecomposition& d,
                                                      double c, double eps);

struct NilpotentSolitonSolution {
  bool consistent = false;
  double c = 0.0;
  double residual = 0.0;
};

/// Solves the symmetrized operator equations for c.
NilpotentSolitonSolution nilpotent_soliton_solve(const DerivedDecomposition& d,
                                                 double eps);

}  // namespace liegeo

#endif
