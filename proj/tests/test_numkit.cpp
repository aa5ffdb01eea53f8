#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liegeo/numkit.hpp"
#include "liegeo/random.hpp"

using namespace liegeo;

namespace {
constexpr double kEps = kDefaultTolerance;

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}
}  // namespace

TEST_CASE("gram_schmidt leaves an orthonormal basis untouched") {
  const Mat I = Mat::Identity(2, 2);
  const auto out = gram_schmidt({Vec::Unit(2, 0), Vec::Unit(2, 1)}, I, kEps);
  CHECK((out[0] - Vec::Unit(2, 0)).norm() == doctest::Approx(0.0));
  CHECK((out[1] - Vec::Unit(2, 1)).norm() == doctest::Approx(0.0));
}

TEST_CASE("gram_schmidt normalizes") {
  const auto out = gram_schmidt({vec2(2.0, 0.0)}, Mat::Identity(2, 2), kEps);
  CHECK((out[0] - vec2(1.0, 0.0)).norm() == doctest::Approx(0.0));
}

TEST_CASE("gram_schmidt respects a non-trivial metric") {
  Mat G = Mat::Zero(2, 2);
  G(0, 0) = 4.0;
  G(1, 1) = 1.0;
  const auto out = gram_schmidt({vec2(1.0, 0.0)}, G, kEps);
  CHECK(out[0][0] == doctest::Approx(0.5));
  CHECK(metric_dot(out[0], out[0], G) == doctest::Approx(1.0));
}

TEST_CASE("gram_schmidt rejects dependent input") {
  CHECK_THROWS_AS(gram_schmidt({vec2(1.0, 0.0), vec2(2.0, 0.0)}, Mat::Identity(2, 2), kEps),
                  DependentInput);
}

TEST_CASE("gram_schmidt output is orthonormal under random SPD metrics") {
  Rng rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform_int(2, 8);
    const Mat G = rng.spd(n, 3.0);
    std::vector<Vec> input;
    for (int i = 0; i < n; ++i) input.push_back(rng.gaussian_vector(n));
    std::vector<Vec> out;
    try {
      out = gram_schmidt(input, G, kEps);
    } catch (const DependentInput&) {
      continue;  // random input may be near-dependent; not the property under test
    }
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = 0; j < out.size(); ++j) {
        const double expect = i == j ? 1.0 : 0.0;
        CHECK(std::abs(metric_dot(out[i], out[j], G) - expect) <= 1e-9);
      }
  }
}

TEST_CASE("canonicalize_orthonormal orders by leading coordinate and fixes signs") {
  std::vector<Vec> vs = {-Vec::Unit(3, 1), Vec::Unit(3, 0)};
  const auto out = canonicalize_orthonormal(vs, kEps);
  CHECK((out[0] - Vec::Unit(3, 0)).norm() == doctest::Approx(0.0));
  CHECK((out[1] - Vec::Unit(3, 1)).norm() == doctest::Approx(0.0));
}

TEST_CASE("solve_for_scalar single equation") {
  const ScalarSolution sol = solve_for_scalar({{vec2(1, 0), vec2(-2, 0)}}, kEps);
  CHECK(sol.kind == ScalarSolution::Kind::Unique);
  CHECK(sol.value == doctest::Approx(-2.0));
}

TEST_CASE("solve_for_scalar vacuous system") {
  const ScalarSolution sol = solve_for_scalar({{vec2(0, 0), vec2(0, 0)}}, kEps);
  CHECK(sol.kind == ScalarSolution::Kind::Underdetermined);
}

TEST_CASE("solve_for_scalar conflicting candidates") {
  const ScalarSolution sol =
      solve_for_scalar({{vec2(1, 0), vec2(-2, 0)}, {vec2(0, 1), vec2(0, -2.5)}}, kEps);
  CHECK(sol.kind == ScalarSolution::Kind::Infeasible);
}

TEST_CASE("solve_for_scalar unique solutions satisfy every constraint") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform_int(1, 5);
    const double c = rng.uniform(-3.0, 3.0);
    std::vector<ScalarConstraint> constraints;
    for (int k = 0; k < 4; ++k) {
      const Vec lhs = rng.gaussian_vector(n);
      constraints.push_back({lhs, Vec(c * lhs)});
    }
    const ScalarSolution sol = solve_for_scalar(constraints, kEps);
    REQUIRE(sol.kind == ScalarSolution::Kind::Unique);
    for (const auto& k : constraints)
      CHECK((sol.value * k.lhs - k.rhs).cwiseAbs().maxCoeff() <= kEps);
  }
}

TEST_CASE("spd_check basics") {
  CHECK(spd_check(Mat::Identity(3, 3), kEps));
  Mat indef = Mat::Zero(2, 2);
  indef(0, 0) = 1.0;
  indef(1, 1) = -1.0;
  CHECK_FALSE(spd_check(indef, kEps));
  Mat G(2, 2);
  G << 2, 1, 1, 2;  // eigenvalues 1 and 3
  CHECK(spd_check(G, kEps));
}

TEST_CASE("spd_report names the failing minor") {
  Mat G = Mat::Identity(3, 3);
  G(1, 1) = -2.0;
  const SpdReport rep = spd_report(G, kEps);
  CHECK_FALSE(rep.ok());
  CHECK(rep.first_nonpositive_minor == 2);
  CHECK(rep.minor_value == doctest::Approx(-2.0));
}

TEST_CASE("spd_check is invariant under permutation congruence") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(2, 6);
    const Mat G = rng.spd(n, 3.0);
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(rng.uniform_int(0, i))]);
    Mat P = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) P(perm[static_cast<size_t>(i)], i) = 1.0;
    const Mat H = P.transpose() * G * P;
    CHECK(spd_check(G, kEps) == spd_check(H, kEps));
  }
}

TEST_CASE("approx_equal handles both tiny and large magnitudes") {
  CHECK(approx_equal(0.0, 5e-10, kEps));
  CHECK_FALSE(approx_equal(0.0, 5e-9, kEps));
  CHECK(approx_equal(1e6, 1e6 * (1 + 1e-10), kEps));
}
