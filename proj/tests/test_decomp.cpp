#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "liegeo/catalog.hpp"
#include "liegeo/decomp.hpp"
#include "liegeo/random.hpp"

using namespace liegeo;

namespace {
constexpr double kEps = kDefaultTolerance;

Mat expected_f1_ex1(int m) {
  Mat f = Mat::Zero(m, m);
  f(0, 1) = -1.0;
  f(1, 0) = 1.0;
  return f;
}

Mat expected_f2_ex1(int m) {
  Mat f = Mat::Zero(m, m);
  for (int j = 1; j + 1 < m; j += 2) {
    f(j, j + 1) = -1.0;
    f(j + 1, j) = 1.0;
  }
  return f;
}
}  // namespace

TEST_CASE("decomposition of the n=5 indecomposable family") {
  const MetricLieAlgebra M = build({Indecomp5p2k{0}, std::nullopt});
  const DerivedDecomposition d = decompose(M);
  REQUIRE(d.kind() == DecompKind::TwoDim);
  CHECK(d.gamma_dim() == 3);

  // e1 = X1, e2 = X2, Gamma basis = (X3, X4, X5)
  CHECK((d.e_vector(0) - Vec::Unit(5, 0)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((d.e_vector(1) - Vec::Unit(5, 1)).cwiseAbs().maxCoeff() <= 1e-12);

  // a2 = X3, a1 = b1 = b2 = 0
  CHECK((d.a2() - Vec::Unit(3, 0)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(d.a1().cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(d.b1().cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(d.b2().cwiseAbs().maxCoeff() <= 1e-12);

  // f1, f2 match the displayed block matrices
  CHECK((d.f1() - expected_f1_ex1(3)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((d.f2() - expected_f2_ex1(3)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("displayed block matrices persist for k = 1") {
  const MetricLieAlgebra M = build({Indecomp5p2k{1}, std::nullopt});
  const DerivedDecomposition d = decompose(M);
  CHECK((d.f1() - expected_f1_ex1(5)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((d.f2() - expected_f2_ex1(5)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("one-dimensional decomposition of Heisenberg x R") {
  const MetricLieAlgebra M = build({HeisenbergProduct{1, 1, {}}, std::nullopt});
  const DerivedDecomposition d = decompose(M);
  REQUIRE(d.kind() == DecompKind::OneDim);
  CHECK(d.gamma_dim() == 3);
  CHECK(d.a().cwiseAbs().maxCoeff() <= 1e-12);
  Mat f = Mat::Zero(3, 3);
  f(1, 0) = 1.0;  // f(u) = v on the symplectic block
  f(0, 1) = -1.0;
  CHECK((d.f() - f).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("affine decomposition has a = x and f = 0") {
  const MetricLieAlgebra M = build({AffineProduct{0}, std::nullopt});
  const DerivedDecomposition d = decompose(M);
  REQUIRE(d.kind() == DecompKind::OneDim);
  CHECK(d.gamma_dim() == 1);
  CHECK(d.a()[0] == doctest::Approx(1.0));
  CHECK((d.gamma_to_ambient(d.a()) - Vec::Unit(2, 1)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(d.f().cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("unsupported derived dimensions are rejected") {
  CHECK_THROWS_AS(decompose(MetricLieAlgebra(LieAlgebra(3, {}), Mat::Identity(3, 3))),
                  UnsupportedDerivedDim);
  std::vector<BracketTerm> so3 = {{0, 1, Vec::Unit(3, 2)},
                                  {1, 2, Vec::Unit(3, 0)},
                                  {0, 2, Vec(-Vec::Unit(3, 1))}};
  CHECK_THROWS_AS(decompose(MetricLieAlgebra(LieAlgebra(3, so3), Mat::Identity(3, 3))),
                  UnsupportedDerivedDim);
}

TEST_CASE("non-abelian two-dimensional derived span is rejected") {
  // Not a Lie algebra (Jacobi fails), but the constructor admits it and the
  // decomposition must refuse: derived span {X1, X2} with [X1, X2] = X2.
  std::vector<BracketTerm> terms = {{0, 1, Vec::Unit(3, 1)},
                                    {0, 2, Vec::Unit(3, 0)}};
  CHECK_THROWS_AS(decompose(MetricLieAlgebra(LieAlgebra(3, terms), Mat::Identity(3, 3))),
                  NonAbelianDerived);
}

TEST_CASE("skew maps stay skew-adjoint under random metrics") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    FamilySpec spec = trial % 2 == 0 ? FamilySpec{Indecomp6p2kType1{0}, std::nullopt}
                                     : FamilySpec{HeisenbergProduct{2, 0, {}}, std::nullopt};
    const int n = family_dimension(spec);
    spec.metric_override = rng.spd(n, 3.0);
    const DerivedDecomposition d = decompose(build(spec));
    CHECK(d.skew_residual() <= 1e-9);
    if (d.kind() == DecompKind::TwoDim) {
      // tr(f1 f2) = tr(f2 f1)
      CHECK(std::abs((d.f1() * d.f2()).trace() - (d.f2() * d.f1()).trace()) <= 1e-10);
    }
  }
}

TEST_CASE("b1 is a scalar multiple of a2") {
  Rng rng(59);
  std::vector<FamilySpec> specs = {{Indecomp5p2k{0}, std::nullopt},
                                   {Indecomp6p2kType1{1}, std::nullopt},
                                   {Indecomp6p2kType2{0}, std::nullopt}};
  for (int trial = 0; trial < 30; ++trial) {
    FamilySpec spec = specs[static_cast<size_t>(trial) % specs.size()];
    const int n = family_dimension(spec);
    spec.metric_override = rng.spd(n, 3.0);
    const DerivedDecomposition d = decompose(build(spec));
    Mat rows(2, d.gamma_dim());
    rows.row(0) = d.a2().transpose();
    rows.row(1) = d.b1().transpose();
    const Eigen::JacobiSVD<Mat> svd(rows);
    const double s2 = svd.singularValues().size() > 1 ? svd.singularValues()[1] : 0.0;
    CHECK(s2 <= 1e-9 * std::max(1.0, svd.singularValues()[0]));
  }
}

TEST_CASE("unimodularity witness equals the mean curvature vector") {
  Rng rng(67);
  std::vector<FamilySpec> specs = {{HeisenbergProduct{1, 0, {}}, std::nullopt},
                                   {AffineProduct{1}, std::nullopt},
                                   {Indecomp6p2kType1{0}, std::nullopt},
                                   {Indecomp5p2k{0}, std::nullopt}};
  for (int trial = 0; trial < 20; ++trial) {
    FamilySpec spec = specs[static_cast<size_t>(trial) % specs.size()];
    const int n = family_dimension(spec);
    spec.metric_override = rng.spd(n, 2.0);
    const MetricLieAlgebra M = build(spec);
    const DerivedDecomposition d = decompose(M);
    const UnimodularityWitness w = unimodularity_witness(d, 1e-9);
    CHECK((w.witness - mean_curvature_vector(M)).cwiseAbs().maxCoeff() <= 1e-9);
  }

  // named cases
  CHECK(unimodularity_witness(decompose(build({HeisenbergProduct{1, 0, {}}, std::nullopt})),
                              kEps)
            .unimodular);
  const UnimodularityWitness aff =
      unimodularity_witness(decompose(build({AffineProduct{0}, std::nullopt})), kEps);
  CHECK_FALSE(aff.unimodular);
  CHECK(aff.witness.norm() == doctest::Approx(1.0));
  const UnimodularityWitness ex2 =
      unimodularity_witness(decompose(build({Indecomp6p2kType1{0}, std::nullopt})), kEps);
  CHECK_FALSE(ex2.unimodular);
  CHECK((ex2.witness - Vec::Unit(6, 2)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("reconstructed brackets round-trip the original") {
  // exact on the catalog bases
  for (const auto& spec : {FamilySpec{Indecomp6p2kType2{0}, std::nullopt},
                           FamilySpec{Indecomp5p2k{1}, std::nullopt}}) {
    const MetricLieAlgebra M = build(spec);
    const DerivedDecomposition d = decompose(M);
    const LieAlgebra rebuilt = reconstruct_brackets(d);
    const LieAlgebra framed = M.algebra().change_basis(d.frame());
    for (int k = 0; k < rebuilt.dim(); ++k)
      CHECK((rebuilt.structure_component(k) - framed.structure_component(k))
                .cwiseAbs()
                .maxCoeff() <= 1e-12);
  }

  // abelian synthetic instance reconstructs to zero constants
  const DerivedDecomposition flat =
      DerivedDecomposition::make_one_dim(Vec::Zero(2), Mat::Zero(2, 2));
  const LieAlgebra zero = reconstruct_brackets(flat);
  for (int k = 0; k < 3; ++k)
    CHECK(zero.structure_component(k).cwiseAbs().maxCoeff() == 0.0);

  // random catalog instance with random SPD metric round-trips within 1e-9
  Rng rng(83);
  std::vector<FamilySpec> specs = {{HeisenbergProduct{2, 1, {}}, std::nullopt},
                                   {AffineProduct{0}, std::nullopt},
                                   {Indecomp5p2k{0}, std::nullopt},
                                   {Indecomp6p2kType1{0}, std::nullopt}};
  for (int trial = 0; trial < 20; ++trial) {
    FamilySpec spec = specs[static_cast<size_t>(trial) % specs.size()];
    const int n = family_dimension(spec);
    spec.metric_override = rng.spd(n, 3.0);
    const MetricLieAlgebra M = build(spec);
    const DerivedDecomposition d = decompose(M);
    const LieAlgebra rebuilt = reconstruct_brackets(d);
    const LieAlgebra framed = M.algebra().change_basis(d.frame());
    for (int k = 0; k < n; ++k)
      CHECK((rebuilt.structure_component(k) - framed.structure_component(k))
                .cwiseAbs()
                .maxCoeff() <= 1e-9);
  }
}

TEST_CASE("frame labels follow the input basis") {
  const DerivedDecomposition d = decompose(build({Indecomp5p2k{0}, std::nullopt}));
  CHECK(d.frame_labels()[0] == "X1");
  CHECK(d.frame_labels()[1] == "X2");
  CHECK(d.frame_labels()[2] == "X3");
}
