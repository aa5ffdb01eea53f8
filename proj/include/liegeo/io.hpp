#ifndef LIEGEO_IO_HPP
#define LIEGEO_IO_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "liegeo/geom.hpp"

namespace liegeo {

using OrderedJson = nlohmann::ordered_json;

/// Parsed form of the JSON interchange document:
/// {
///   "dim": 3,
///   "basis": ["e", "u", "v"],                      // optional, default X1..Xn
///   "brackets": [{"x": "u", "y": "v", "result": {"e": 1.0}}],
///   "metric": [[...], ...],                        // optional, default identity
///   "tolerance": 1e-9                              // optional
/// }
/// Bracket endpoints may be basis names or 1-based indices, and must satisfy
/// index(x) < index(y).
struct InputDocument {
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketTerm> brackets;  // 0-based
  Mat metric;
  double tolerance = kDefaultTolerance;
};

InputDocument parse_input(const OrderedJson& j);
InputDocument parse_input_text(const std::string& text);

/// Normalized re-emission: sorted bracket pairs, explicit metric and
/// tolerance; parse(emit(doc)) reproduces doc exactly.
OrderedJson emit_input(const InputDocument& doc);

LieAlgebra to_algebra(const InputDocument& doc);
MetricLieAlgebra to_metric_algebra(const InputDocument& doc);

/// Scalar rendering used everywhere in reports: 17 significant digits, so
/// doubles round-trip losslessly and output is byte-stable.
std::string render_scalar(double x);

/// Deterministic serializer for reports: object keys in insertion order,
/// floats through render_scalar, primitive-only arrays on a single line.
std::string render_json(const OrderedJson& j, int indent = 2);

OrderedJson vec_to_json(const Vec& v);
OrderedJson mat_to_json(const Mat& m);
Mat json_to_mat(const OrderedJson& j, const char* what);

}  // namespace liegeo

#endif
