#ifndef LIEGEO_CATALOG_HPP
#define LIEGEO_CATALOG_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liegeo/geom.hpp"

namespace liegeo {

/// H_{2m+1} x R^abelian with one symplectic block per (u_i, v_i) pair; the
/// optional per-block scales lambda_i exercise the c = -(3/2) lambda^2
/// scaling law.
struct HeisenbergProduct {
  int m = 1;
  int abelian = 0;
  std::vector<double> lambdas;  ///< empty means all 1
};

/// A(1) x R^abelian, bracket [x, e] = e.
struct AffineProduct {
  int abelian = 0;
};

/// Indecomposable, n = 5 + 2k:
///   [X3,X4]=X1, [X3,X1]=X2, [X4,X5]=...=[X_{4+2k},X_{5+2k}]=X2.
struct Indecomp5p2k {
  int k = 0;
};

/// Indecomposable, n = 6 + 2k, first type:
///   [X3,X1]=X1, [X3,X4]=[X5,X6]=...=[X_{5+2k},X_{6+2k}]=X2.
struct Indecomp6p2kType1 {
  int k = 0;
};

/// Indecomposable, n = 6 + 2k, second type:
///   [X3,X4]=X1, [X3,X1]=[X5,X6]=...=[X_{5+2k},X_{6+2k}]=X2.
struct Indecomp6p2kType2 {
  int k = 0;
};

using Family = std::variant<HeisenbergProduct, AffineProduct, Indecomp5p2k,
                            Indecomp6p2kType1, Indecomp6p2kType2>;

struct FamilySpec {
  Family family;
  std::optional<Mat> metric_override;  ///< default: identity (orthonormal basis)
};

std::string family_name(const FamilySpec& spec);
int family_dimension(const FamilySpec& spec);

/// Builds the algebra with its metric; throws BadParameters on bad
/// parameters or a non-SPD override.
MetricLieAlgebra build(const FamilySpec& spec);

/// A published reference value for a family, kept verbatim even when the
/// pipeline disagrees; disputed entries carry the independently recomputed
/// value in `note`.
struct ExpectedEntry {
  std::string name;
  bool numeric = true;
  double value = 0.0;
  std::string text;    ///< for non-numeric expectations (verdicts)
  std::string source;  ///< "published"
  bool disputed = false;
  std::string note;
};

struct ExpectedValues {
  std::vector<ExpectedEntry> entries;
};

/// Published values for the three indecomposable families; throws
/// NoExpectationsForFamily otherwise.
ExpectedValues expected(const FamilySpec& spec);

}  // namespace liegeo

#endif
