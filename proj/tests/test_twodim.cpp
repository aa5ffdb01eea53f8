#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "liegeo/catalog.hpp"
#include "liegeo/random.hpp"
#include "liegeo/soliton.hpp"
#include "liegeo/twodim.hpp"

using namespace liegeo;

namespace {
constexpr double kEps = kDefaultTolerance;

DerivedDecomposition ex1() { return decompose(build({Indecomp5p2k{0}, std::nullopt})); }
DerivedDecomposition ex2() { return decompose(build({Indecomp6p2kType1{0}, std::nullopt})); }
DerivedDecomposition ex3() { return decompose(build({Indecomp6p2kType2{0}, std::nullopt})); }

DerivedDecomposition zero_two_dim(int m) {
  return DerivedDecomposition::make_two_dim(Vec::Zero(m), Vec::Zero(m), Vec::Zero(m),
                                            Vec::Zero(m), Mat::Zero(m, m), Mat::Zero(m, m));
}

// Heisenberg-like block in f1, scaled; f2 = 0.
DerivedDecomposition nilpotent_block(double lambda) {
  Mat f1 = Mat::Zero(2, 2);
  f1(0, 1) = -lambda;
  f1(1, 0) = lambda;
  return DerivedDecomposition::make_two_dim(Vec::Zero(2), Vec::Zero(2), Vec::Zero(2),
                                            Vec::Zero(2), f1, Mat::Zero(2, 2));
}
}  // namespace

TEST_CASE("Ricci coefficients of the named families") {
  SUBCASE("n = 5 family: everything cancels on e1") {
    const RicciCoefficients rc = ricci_coefficients(ex1());
    CHECK(rc.A1 == doctest::Approx(0.0));
    CHECK(rc.B1 == doctest::Approx(0.0));
    CHECK(rc.A2 == rc.B1);
    CHECK(rc.E1.cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(rc.E2.cwiseAbs().maxCoeff() <= 1e-12);
    // block-count trace gives B2 = 1, not the published 3/2
    CHECK(rc.B2 == doctest::Approx(1.0));
  }

  SUBCASE("2-step nilpotent: coefficients reduce to traces") {
    Rng rng(13);
    for (int t = 0; t < 10; ++t) {
      const int m = rng.uniform_int(2, 5);
      const Mat f1 = rng.skew(m), f2 = rng.skew(m);
      const DerivedDecomposition d = DerivedDecomposition::make_two_dim(
          Vec::Zero(m), Vec::Zero(m), Vec::Zero(m), Vec::Zero(m), f1, f2);
      const RicciCoefficients rc = ricci_coefficients(d);
      CHECK(rc.A1 == doctest::Approx(-0.25 * (f1 * f1).trace()));
      CHECK(rc.B2 == doctest::Approx(-0.25 * (f2 * f2).trace()));
      CHECK(rc.B1 == doctest::Approx(-0.25 * (f1 * f2).trace()));
      CHECK(rc.E1.cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(rc.E2.cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((rc.E_of - 0.5 * (f1 * f1 + f2 * f2)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }

  SUBCASE("type-1 family: E2 = -1/2 X4") {
    const RicciCoefficients rc = ricci_coefficients(ex2());
    Vec expected = Vec::Zero(4);  // Gamma basis (X3, X4, X5, X6)
    expected[1] = -0.5;
    CHECK((rc.E2 - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("connection table") {
  const DerivedDecomposition d = ex1();
  const int n = 5;
  // nabla_{e1} e2 = 1/2 (a2 + b1) = 1/2 X3
  const Vec ne1e2 = connection_2d(d, Vec::Unit(n, 0), Vec::Unit(n, 1));
  CHECK((ne1e2 - 0.5 * Vec::Unit(n, 2)).cwiseAbs().maxCoeff() <= 1e-12);
  // nabla_{e1} e1 = a1 (= X3 on the type-1 family)
  const Vec ne1e1 = connection_2d(ex2(), Vec::Unit(6, 0), Vec::Unit(6, 0));
  CHECK((ne1e1 - Vec::Unit(6, 2)).cwiseAbs().maxCoeff() <= 1e-12);
  // nabla_{e2} X4 = -1/2 X5
  const Vec ne2x4 = connection_2d(d, Vec::Unit(n, 1), Vec::Unit(n, 3));
  CHECK((ne2x4 + 0.5 * Vec::Unit(n, 4)).cwiseAbs().maxCoeff() <= 1e-12);

  // type-2 family: nabla_{X4} X3 = -1/2 e1
  const DerivedDecomposition d3 = ex3();
  const Vec nx4x3 = connection_2d(d3, Vec::Unit(6, 3), Vec::Unit(6, 2));
  CHECK((nx4x3 + 0.5 * Vec::Unit(6, 0)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("sectional curvature planes") {
  const DerivedDecomposition d = ex1();
  CHECK(sectional_2d(d, PlaneE1E2{}) == doctest::Approx(0.25));

  // K(X4, X5) = -3/4
  PlaneGamma uv;
  uv.u = Vec::Unit(3, 1);
  uv.v = Vec::Unit(3, 2);
  CHECK(sectional_2d(d, uv) == doctest::Approx(-0.75));

  // a direction orthogonal to all invariant vectors with f1(u) = f2(u) = 0
  // gives K(e1, u) = 0: extend the n=5 family by an abelian direction X6.
  std::vector<BracketTerm> terms = {{2, 3, Vec::Unit(6, 0)},
                                    {0, 2, Vec(-Vec::Unit(6, 1))},
                                    {3, 4, Vec::Unit(6, 1)}};
  const MetricLieAlgebra M(LieAlgebra(6, terms), Mat::Identity(6, 6));
  const DerivedDecomposition dx = decompose(M);
  PlaneE1U plane;
  plane.u = Vec::Unit(4, 3);  // X6 in Gamma coordinates
  CHECK(sectional_2d(dx, plane) == doctest::Approx(0.0));

  PlaneE1U bad;
  bad.u = Vec(2.0 * Vec::Unit(3, 0));
  CHECK_THROWS_AS(sectional_2d(d, bad), NonOrthonormalInput);
}

TEST_CASE("Ricci transformation in closed form") {
  // type-1: Ric(e1) = -e1
  const TwoDimRicci r2 = ricci_2d(ex2());
  CHECK((r2.ric_e1 + Vec::Unit(6, 0)).cwiseAbs().maxCoeff() <= 1e-12);

  // type-2: Ric(u) = -1/2 (<u, X3> X3 + u)
  const DerivedDecomposition d3 = ex3();
  const TwoDimRicci r3 = ricci_2d(d3);
  for (int j = 0; j < d3.gamma_dim(); ++j) {
    Vec expected = Vec::Zero(6);
    expected.tail(4) = -0.5 * Vec::Unit(4, j);
    if (j == 0) expected[2] += -0.5;
    CHECK((r3.ric_gamma.col(j) - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }

  // all-zero instance
  const TwoDimRicci rz = ricci_2d(zero_two_dim(3));
  CHECK(rz.ric_operator.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("soliton system residuals on the n = 5 family") {
  const DerivedDecomposition d = ex1();
  // the f2-pair equation pins c = -5/2; the a2-row equation pins c = -2
  const SolitonSystemResiduals at_52 = soliton_system_residuals(d, -2.5);
  CHECK(at_52.eq[10] <= 1e-12);                    // eq11 satisfied
  CHECK(at_52.eq[7] == doctest::Approx(0.5));      // eq8 off by 1/2
  const SolitonSystemResiduals at_2 = soliton_system_residuals(d, -2.0);
  CHECK(at_2.eq[7] <= 1e-12);
  CHECK(at_2.eq[10] == doctest::Approx(0.5));

  // eq1-eq9 vanish identically for 2-step nilpotent instances
  Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    const int m = rng.uniform_int(2, 5);
    const DerivedDecomposition nil = DerivedDecomposition::make_two_dim(
        Vec::Zero(m), Vec::Zero(m), Vec::Zero(m), Vec::Zero(m), rng.skew(m), rng.skew(m));
    const SolitonSystemResiduals res = soliton_system_residuals(nil, rng.uniform(-3, 3));
    for (int eq = 0; eq < 9; ++eq) CHECK(res.eq[static_cast<size_t>(eq)] <= 1e-12);
  }

  // all-zero instance: every residual vanishes for any c
  const SolitonSystemResiduals rz = soliton_system_residuals(zero_two_dim(3), 0.0);
  CHECK(rz.max() == 0.0);
}

TEST_CASE("soliton system solve") {
  SUBCASE("n = 5 family is inconsistent with candidates -2 and -5/2") {
    const SolitonSystemSolution sol = soliton_system_solve(ex1(), kEps);
    CHECK_FALSE(sol.consistent);
    bool has_2 = false, has_52 = false;
    for (const auto& cand : sol.candidates) {
      if (approx_equal(cand.c, -2.0, 1e-9)) has_2 = true;
      if (approx_equal(cand.c, -2.5, 1e-9)) has_52 = true;
    }
    CHECK(has_2);
    CHECK(has_52);
  }

  SUBCASE("type-1 family: candidate -3/2 from the a1-row equation") {
    const SolitonSystemSolution sol = soliton_system_solve(ex2(), kEps);
    CHECK_FALSE(sol.consistent);
    bool found = false;
    for (const auto& cand : sol.candidates)
      if (cand.equation == 6 && approx_equal(cand.c, -1.5, 1e-9)) found = true;
    CHECK(found);
  }

  SUBCASE("type-2 family is inconsistent") {
    CHECK_FALSE(soliton_system_solve(ex3(), kEps).consistent);
  }

  SUBCASE("flat instance is consistent with c = 0") {
    const SolitonSystemSolution sol = soliton_system_solve(zero_two_dim(3), kEps);
    CHECK(sol.consistent);
    CHECK(sol.c == 0.0);
  }
}

TEST_CASE("nilpotent closed form") {
  SUBCASE("zero maps satisfy any c") {
    const NilpotentSolitonResiduals res =
        nilpotent_soliton_residuals(zero_two_dim(2), 1.7, kEps);
    CHECK(res.symmetrized == 0.0);
    CHECK(res.published == 0.0);
  }

  SUBCASE("single block scales as c = -(3/2) lambda^2") {
    for (const double lambda : {1.0, 2.0}) {
      const DerivedDecomposition d = nilpotent_block(lambda);
      const NilpotentSolitonSolution sol = nilpotent_soliton_solve(d, kEps);
      CHECK(sol.consistent);
      CHECK(sol.c == doctest::Approx(-1.5 * lambda * lambda));
      CHECK(nilpotent_soliton_residuals(d, sol.c, kEps).symmetrized <= 1e-12);
    }
  }

  SUBCASE("instances with nonzero invariant vectors are rejected") {
    CHECK_THROWS_AS(nilpotent_soliton_residuals(ex1(), 0.0, kEps), NotNilpotent);
  }
}

TEST_CASE("closed forms agree with the generic operators on random metrics") {
  Rng rng(211);
  std::vector<FamilySpec> specs = {{Indecomp5p2k{0}, std::nullopt},
                                   {Indecomp5p2k{1}, std::nullopt},
                                   {Indecomp6p2kType1{0}, std::nullopt},
                                   {Indecomp6p2kType2{0}, std::nullopt}};
  for (int trial = 0; trial < 24; ++trial) {
    FamilySpec spec = specs[static_cast<size_t>(trial) % specs.size()];
    const int n = family_dimension(spec);
    spec.metric_override = rng.spd(n, 3.0);
    const MetricLieAlgebra M = build(spec);
    const DerivedDecomposition d = decompose(M);
    const int m = d.gamma_dim();

    // connection
    for (int rep = 0; rep < 3; ++rep) {
      const Vec xf = rng.gaussian_vector(n);
      const Vec yf = rng.gaussian_vector(n);
      const Vec via_geom = d.to_frame(nabla(M, d.from_frame(xf), d.from_frame(yf)));
      CHECK((connection_2d(d, xf, yf) - via_geom).cwiseAbs().maxCoeff() <= 1e-8);
    }

    // sectional curvature, all four plane shapes
    std::vector<Vec> pair = gram_schmidt(
        {rng.gaussian_vector(m), rng.gaussian_vector(m)}, Mat::Identity(m, m), kEps);
    const Vec ua = d.gamma_to_ambient(pair[0]);
    const Vec va = d.gamma_to_ambient(pair[1]);
    CHECK(std::abs(sectional_2d(d, PlaneE1E2{}) -
                   sectional(M, d.e_vector(0), d.e_vector(1))) <= 1e-8);
    CHECK(std::abs(sectional_2d(d, PlaneE1U{pair[0]}) - sectional(M, d.e_vector(0), ua)) <=
          1e-8);
    CHECK(std::abs(sectional_2d(d, PlaneE2U{pair[0]}) - sectional(M, d.e_vector(1), ua)) <=
          1e-8);
    CHECK(std::abs(sectional_2d(d, PlaneGamma{pair[0], pair[1]}) - sectional(M, ua, va)) <=
          1e-8);

    // Ricci operator and the A(u)/B(u) functionals
    const TwoDimRicci r = ricci_2d(d);
    const Mat geom_op = ricci_operator_ambient(M, ricci_trace_formula(M));
    for (int col = 0; col < n; ++col) {
      const Vec via_geom = d.to_frame(geom_op * d.from_frame(Vec::Unit(n, col)));
      CHECK((r.ric_operator.col(col) - via_geom).cwiseAbs().maxCoeff() <= 1e-8);
    }
    const RicciCoefficients rc = ricci_coefficients(d);
    const RicciData ric = ricci_trace_formula(M);
    const Vec u = rng.gaussian_vector(m);
    const Vec ua2 = d.gamma_to_ambient(u);
    // ric(e1, u) = <u, E1>, ric(e2, u) = <u, E2>
    const Mat form_amb = M.metric() * M.frame() * ric.ric_form *
                         M.frame().transpose() * M.metric();
    CHECK(std::abs(d.e_vector(0).dot(form_amb * ua2) - rc.A_of.dot(u)) <= 1e-8);
    CHECK(std::abs(d.e_vector(1).dot(form_amb * ua2) - rc.B_of.dot(u)) <= 1e-8);
  }
}

TEST_CASE("nilpotent closed-form2 consistency implies an oracle soliton") {
  Rng rng(307);
  int consistent_seen = 0;
  for (int t = 0; t < 40; ++t) {
    const int m = rng.uniform_int(2, 4);
    Mat f1 = rng.skew(m), f2 = rng.skew(m);
    if (t % 4 == 0) {
      // make some instances genuinely consistent: a pair of equal-scale
      // commuting blocks
      f1 = Mat::Zero(4, 4);
      f2 = Mat::Zero(4, 4);
      f1(0, 1) = -1.0;
      f1(1, 0) = 1.0;
      f2(2, 3) = -1.0;
      f2(3, 2) = 1.0;
    }
    const DerivedDecomposition d = DerivedDecomposition::make_two_dim(
        Vec::Zero(f1.rows()), Vec::Zero(f1.rows()), Vec::Zero(f1.rows()),
        Vec::Zero(f1.rows()), f1, f2);
    const SolitonSystemSolution sys = soliton_system_solve(d, 1e-8);
    if (!sys.consistent) continue;
    ++consistent_seen;
    // reconstruct a genuine metric Lie algebra and ask the oracle
    const LieAlgebra L = reconstruct_brackets(d);
    const MetricLieAlgebra M(L, Mat::Identity(L.dim(), L.dim()));
    const SolitonVerdict oracle = oracle_solve(M, 1e-8);
    CHECK(oracle.is_soliton);
    CHECK(oracle.c == doctest::Approx(sys.c));
  }
  CHECK(consistent_seen > 0);
}
