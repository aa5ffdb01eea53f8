#include "liegeo/catalog.hpp"

#include <cmath>

namespace liegeo {

namespace {

Vec unit(int n, int i) { return Vec::Unit(n, i); }

LieAlgebra build_heisenberg(const HeisenbergProduct& fam) {
  if (fam.m < 1) throw BadParameters("heisenberg: m must be >= 1");
  if (fam.abelian < 0) throw BadParameters("heisenberg: abelian part must be >= 0");
  std::vector<double> lambdas = fam.lambdas;
  if (lambdas.empty()) lambdas.assign(static_cast<size_t>(fam.m), 1.0);
  if (static_cast<int>(lambdas.size()) != fam.m)
    throw BadParameters("heisenberg: need one lambda per block");
  const int n = 2 * fam.m + 1 + fam.abelian;

  std::vector<std::string> labels = {"e"};
  std::vector<BracketTerm> terms;
  for (int i = 0; i < fam.m; ++i) {
    labels.push_back("u" + std::to_string(i + 1));
    labels.push_back("v" + std::to_string(i + 1));
    // [u_i, v_i] = lambda_i e
    terms.push_back({1 + 2 * i, 2 + 2 * i, Vec(lambdas[static_cast<size_t>(i)] * unit(n, 0))});
  }
  for (int i = 0; i < fam.abelian; ++i) labels.push_back("w" + std::to_string(i + 1));
  return LieAlgebra(n, terms, labels);
}

LieAlgebra build_affine(const AffineProduct& fam) {
  if (fam.abelian < 0) throw BadParameters("affine: abelian part must be >= 0");
  const int n = 2 + fam.abelian;
  std::vector<std::string> labels = {"e", "x"};
  for (int i = 0; i < fam.abelian; ++i) labels.push_back("w" + std::to_string(i + 1));
  // [x, e] = e
  std::vector<BracketTerm> terms = {{0, 1, Vec(-unit(n, 0))}};
  return LieAlgebra(n, terms, labels);
}

LieAlgebra build_5p2k(const Indecomp5p2k& fam) {
  if (fam.k < 0) throw BadParameters("indecomp5p2k: k must be >= 0");
  const int n = 5 + 2 * fam.k;
  std::vector<BracketTerm> terms;
  terms.push_back({2, 3, Vec(unit(n, 0))});   // [X3, X4] = X1
  terms.push_back({0, 2, Vec(-unit(n, 1))});  // [X3, X1] = X2
  for (int i = 0; i <= fam.k; ++i)
    terms.push_back({3 + 2 * i, 4 + 2 * i, Vec(unit(n, 1))});  // [X_{4+2i}, X_{5+2i}] = X2
  return LieAlgebra(n, terms);
}

LieAlgebra build_6p2k_type1(const Indecomp6p2kType1& fam) {
  if (fam.k < 0) throw BadParameters("indecomp6p2k-type1: k must be >= 0");
  const int n = 6 + 2 * fam.k;
  std::vector<BracketTerm> terms;
  terms.push_back({0, 2, Vec(-unit(n, 0))});  // [X3, X1] = X1
  for (int i = 0; i <= fam.k; ++i)
    terms.push_back({2 + 2 * i, 3 + 2 * i, Vec(unit(n, 1))});  // [X_{3+2i}, X_{4+2i}] = X2
  return LieAlgebra(n, terms);
}

LieAlgebra build_6p2k_type2(const Indecomp6p2kType2& fam) {
  if (fam.k < 0) throw BadParameters("indecomp6p2k-type2: k must be >= 0");
  const int n = 6 + 2 * fam.k;
  std::vector<BracketTerm> terms;
  terms.push_back({2, 3, Vec(unit(n, 0))});   // [X3, X4] = X1
  terms.push_back({0, 2, Vec(-unit(n, 1))});  // [X3, X1] = X2
  for (int i = 0; i <= fam.k; ++i)
    terms.push_back({4 + 2 * i, 5 + 2 * i, Vec(unit(n, 1))});  // [X_{5+2i}, X_{6+2i}] = X2
  return LieAlgebra(n, terms);
}

}  // namespace

std::string family_name(const FamilySpec& spec) {
  return std::visit(
      [](const auto& fam) -> std::string {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, HeisenbergProduct>) {
          return "heisenberg(m=" + std::to_string(fam.m) +
                 ",abelian=" + std::to_string(fam.abelian) + ")";
        } else if constexpr (std::is_same_v<T, AffineProduct>) {
          return "affine(abelian=" + std::to_string(fam.abelian) + ")";
        } else if constexpr (std::is_same_v<T, Indecomp5p2k>) {
          return "indecomp5p2k(k=" + std::to_string(fam.k) + ")";
        } else if constexpr (std::is_same_v<T, Indecomp6p2kType1>) {
          return "indecomp6p2k-type1(k=" + std::to_string(fam.k) + ")";
        } else {
          return "indecomp6p2k-type2(k=" + std::to_string(fam.k) + ")";
        }
      },
      spec.family);
}

int family_dimension(const FamilySpec& spec) {
  return std::visit(
      [](const auto& fam) -> int {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, HeisenbergProduct>) {
          return 2 * fam.m + 1 + fam.abelian;
        } else if constexpr (std::is_same_v<T, AffineProduct>) {
          return 2 + fam.abelian;
        } else if constexpr (std::is_same_v<T, Indecomp5p2k>) {
          return 5 + 2 * fam.k;
        } else if constexpr (std::is_same_v<T, Indecomp6p2kType1>) {
          return 6 + 2 * fam.k;
        } else {
          return 6 + 2 * fam.k;
        }
      },
      spec.family);
}

MetricLieAlgebra build(const FamilySpec& spec) {
  LieAlgebra algebra = std::visit(
      [](const auto& fam) -> LieAlgebra {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, HeisenbergProduct>) {
          return build_heisenberg(fam);
        } else if constexpr (std::is_same_v<T, AffineProduct>) {
          return build_affine(fam);
        } else if constexpr (std::is_same_v<T, Indecomp5p2k>) {
          return build_5p2k(fam);
        } else if constexpr (std::is_same_v<T, Indecomp6p2kType1>) {
          return build_6p2k_type1(fam);
        } else {
          return build_6p2k_type2(fam);
        }
      },
      spec.family);
  const int n = algebra.dim();
  Mat metric = spec.metric_override.value_or(Mat::Identity(n, n));
  return MetricLieAlgebra(std::move(algebra), std::move(metric));
}

namespace {

ExpectedEntry number(std::string name, double value) {
  ExpectedEntry e;
  e.name = std::move(name);
  e.value = value;
  e.source = "published";
  return e;
}

ExpectedEntry disputed_number(std::string name, double value, std::string note) {
  ExpectedEntry e = number(std::move(name), value);
  e.disputed = true;
  e.note = std::move(note);
  return e;
}

ExpectedEntry verdict(std::string text) {
  ExpectedEntry e;
  e.name = "verdict";
  e.numeric = false;
  e.text = std::move(text);
  e.source = "published";
  return e;
}

}  // namespace

ExpectedValues expected(const FamilySpec& spec) {
  ExpectedValues out;
  if (const auto* fam = std::get_if<Indecomp5p2k>(&spec.family)) {
    const double n = 5 + 2 * fam->k;
    out.entries.push_back(number("tr_f1_sq", -2.0));
    out.entries.push_back(disputed_number(
        "tr_f2_sq", 1.0 - n, "direct block count gives 3-n"));
    out.entries.push_back(number("tr_f1_f2", 0.0));
    out.entries.push_back(number("ric_e1_coeff", 0.0));
    out.entries.push_back(disputed_number(
        "ric_e2_coeff", (n + 1.0) / 4.0, "recomputing with tr(f2^2)=3-n gives (n-1)/4"));
    out.entries.push_back(number("candidate_c_a", -(n + 5.0) / 4.0));
    out.entries.push_back(number("candidate_c_b", -2.0));
    out.entries.push_back(verdict("not a Ricci soliton"));
    return out;
  }
  if (const auto* fam = std::get_if<Indecomp6p2kType1>(&spec.family)) {
    const double n = 6 + 2 * fam->k;
    out.entries.push_back(number("tr_f1_sq", 0.0));
    out.entries.push_back(disputed_number(
        "tr_f2_sq", -n, "direct block count gives 2-n"));
    out.entries.push_back(number("tr_f1_f2", 0.0));
    out.entries.push_back(number("ric_e1_coeff", -1.0));
    out.entries.push_back(disputed_number(
        "ric_e2_coeff", n / 4.0, "recomputing with tr(f2^2)=2-n gives (n-2)/4"));
    out.entries.push_back(number("candidate_c_a", -1.5));
    out.entries.push_back(verdict("not a Ricci soliton"));
    return out;
  }
  if (const auto* fam = std::get_if<Indecomp6p2kType2>(&spec.family)) {
    const double n = 6 + 2 * fam->k;
    const double k = fam->k;
    out.entries.push_back(number("tr_f1_sq", -2.0));
    out.entries.push_back(disputed_number(
        "tr_f2_sq", 2.0 - n, "direct block count gives 4-n"));
    out.entries.push_back(number("ric_e1_coeff", 0.0));
    out.entries.push_back(disputed_number(
        "ric_e2_coeff", (k + 3.0) / 2.0, "recomputing with tr(f2^2)=4-n gives (k+2)/2"));
    out.entries.push_back(disputed_number(
        "candidate_c_a", -(k + 5.0) / 2.0,
        "recomputing with the block-count traces gives -2"));
    out.entries.push_back(verdict("not a Ricci soliton"));
    return out;
  }
  throw NoExpectationsForFamily("no published expectations for " + family_name(spec));
}

}  // namespace liegeo
