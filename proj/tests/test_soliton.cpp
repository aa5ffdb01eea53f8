#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "liegeo/catalog.hpp"
#include "liegeo/random.hpp"
#include "liegeo/soliton.hpp"

using namespace liegeo;

namespace {
constexpr double kEps = kDefaultTolerance;
}

TEST_CASE("classification by sign of c") {
  CHECK(classify(-1.0, kEps) == SolitonClass::Expanding);
  CHECK(classify(0.0, kEps) == SolitonClass::Steady);
  CHECK(classify(0.5, kEps) == SolitonClass::Shrinking);
}

TEST_CASE("abelian algebras are steady solitons with D = 0") {
  Rng rng(19);
  for (const int n : {2, 4}) {
    const MetricLieAlgebra M(LieAlgebra(n, {}), rng.spd(n, 2.0));
    const SolitonVerdict v = oracle_solve(M, kEps);
    CHECK(v.is_soliton);
    CHECK(v.c == 0.0);
    CHECK(v.soliton_class == SolitonClass::Steady);
    CHECK(v.D.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("Heisenberg soliton with c = -3/2 and D = diag(2, 1, 1)") {
  const MetricLieAlgebra M = build({HeisenbergProduct{1, 0, {}}, std::nullopt});
  const SolitonVerdict v = oracle_solve(M, kEps);
  REQUIRE(v.is_soliton);
  CHECK(v.c == doctest::Approx(-1.5));
  CHECK(v.soliton_class == SolitonClass::Expanding);
  CHECK(v.derivation_residual <= kEps);
  Vec diag(3);
  diag << 2.0, 1.0, 1.0;
  CHECK((v.D - Mat(diag.asDiagonal())).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("block scaling law c = -(3/2) lambda^2") {
  for (const double lambda : {1.0, 2.0}) {
    const MetricLieAlgebra M = build({HeisenbergProduct{1, 0, {lambda}}, std::nullopt});
    const SolitonVerdict v = oracle_solve(M, kEps);
    REQUIRE(v.is_soliton);
    CHECK(std::abs(v.c + 1.5 * lambda * lambda) <= 1e-9);
  }
}

TEST_CASE("n = 5 family is not a soliton; candidates -2 and -(n+5)/4 conflict") {
  const MetricLieAlgebra M = build({Indecomp5p2k{0}, std::nullopt});
  const SolitonVerdict v = oracle_solve(M, kEps);
  CHECK_FALSE(v.is_soliton);
  std::set<int> seen;
  for (const auto& pc : v.c_constraints) {
    if (!pc.defined) continue;
    if (pc.fit_residual > kEps) continue;  // cleanly determined pairs only
    if (approx_equal(pc.candidate_c, -2.0, 1e-9)) seen.insert(0);
    if (approx_equal(pc.candidate_c, -2.5, 1e-9)) seen.insert(1);
  }
  CHECK(seen.size() == 2);
}

TEST_CASE("type-1 family: infeasible with a non-central right side") {
  const MetricLieAlgebra M = build({Indecomp6p2kType1{0}, std::nullopt});
  const SolitonVerdict v = oracle_solve(M, kEps);
  CHECK_FALSE(v.is_soliton);
  bool candidate_32 = false, non_central_pair = false;
  for (const auto& pc : v.c_constraints) {
    if (!pc.defined) continue;
    if (pc.fit_residual <= kEps && approx_equal(pc.candidate_c, -1.5, 1e-9))
      candidate_32 = true;
    if (pc.fit_residual > 0.1) non_central_pair = true;
  }
  CHECK(candidate_32);
  CHECK(non_central_pair);
}

TEST_CASE("cross validation") {
  SUBCASE("affine A(1): every method agrees on c = -1") {
    const CrossReport rep = cross_validate(build({AffineProduct{0}, std::nullopt}), kEps);
    CHECK(rep.oracle.is_soliton);
    CHECK(rep.oracle.c == doctest::Approx(-1.0));
    CHECK(rep.discrepancies.empty());
    CHECK(rep.methods.size() == 3);  // oracle + published + corrected
    for (const auto& m : rep.methods) {
      CHECK(m.is_soliton);
      CHECK(m.c == doctest::Approx(-1.0));
    }
  }

  SUBCASE("Heisenberg: exactly one discrepancy, against the published branch") {
    const CrossReport rep =
        cross_validate(build({HeisenbergProduct{1, 0, {}}, std::nullopt}), kEps);
    CHECK(rep.oracle.is_soliton);
    REQUIRE(rep.discrepancies.size() == 1);
    CHECK(rep.discrepancies[0].method_a.find("published") != std::string::npos);
  }

  SUBCASE("type-1 family: no discrepancy, both report non-soliton") {
    const CrossReport rep =
        cross_validate(build({Indecomp6p2kType1{0}, std::nullopt}), kEps);
    CHECK_FALSE(rep.oracle.is_soliton);
    CHECK(rep.discrepancies.empty());
  }
}

TEST_CASE("soliton verdicts imply a genuine derivation") {
  Rng rng(37);
  std::vector<FamilySpec> specs = {{HeisenbergProduct{1, 0, {}}, std::nullopt},
                                   {HeisenbergProduct{1, 2, {}}, std::nullopt},
                                   {AffineProduct{1}, std::nullopt}};
  for (int t = 0; t < 20; ++t) {
    FamilySpec spec = specs[static_cast<size_t>(t) % specs.size()];
    const int n = family_dimension(spec);
    spec.metric_override = rng.spd(n, 2.0);
    const MetricLieAlgebra M = build(spec);
    const SolitonVerdict v = oracle_solve(M, 1e-8);
    if (!v.is_soliton) continue;
    CHECK(M.framed_algebra().is_derivation(v.D, 1e-8).pass);
  }
}

TEST_CASE("verdict is invariant under orthogonal changes of frame") {
  Rng rng(43);
  const std::vector<FamilySpec> specs = {{HeisenbergProduct{1, 0, {}}, std::nullopt},
                                         {Indecomp5p2k{0}, std::nullopt},
                                         {AffineProduct{0}, std::nullopt}};
  for (int t = 0; t < 15; ++t) {
    const FamilySpec spec = specs[static_cast<size_t>(t) % specs.size()];
    const int n = family_dimension(spec);
    const MetricLieAlgebra M = build(spec);
    const SolitonVerdict base = oracle_solve(M, 1e-8);

    const Mat Q = rng.orthogonal(n);
    const MetricLieAlgebra rotated(M.algebra().change_basis(Q),
                                   Q.transpose() * M.metric() * Q);
    const SolitonVerdict turned = oracle_solve(rotated, 1e-8);
    CHECK(base.is_soliton == turned.is_soliton);
    if (base.is_soliton) CHECK(std::abs(base.c - turned.c) <= 1e-8);
  }
}

TEST_CASE("metric scaling sends c to c / t") {
  Rng rng(47);
  for (const double t : {0.5, 2.0, 10.0}) {
    const FamilySpec base{HeisenbergProduct{1, 1, {}}, std::nullopt};
    const int n = family_dimension(base);
    const Mat G = rng.spd(n, 2.0);
    FamilySpec ref = base, scaled = base;
    ref.metric_override = G;
    scaled.metric_override = t * G;
    const SolitonVerdict v1 = oracle_solve(build(ref), 1e-8);
    const SolitonVerdict v2 = oracle_solve(build(scaled), 1e-8);
    REQUIRE(v1.is_soliton);
    REQUIRE(v2.is_soliton);
    CHECK(std::abs(v2.c - v1.c / t) <= 1e-8);
  }
}
