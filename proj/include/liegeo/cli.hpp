#ifndef LIEGEO_CLI_HPP
#define LIEGEO_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "liegeo/catalog.hpp"
#include "liegeo/io.hpp"

namespace liegeo {

/// Invalid mathematics in an otherwise well-formed input (Jacobi failure);
/// maps to exit code 1.
class InvalidAlgebra : public Error {
public:
  using Error::Error;
};

struct AnalyzeOptions {
  double tolerance = kDefaultTolerance;
  std::string method = "all";  ///< oracle | theorem | all
  bool timing = false;         ///< include wall-clock timing (breaks byte stability)
};

/// Full pipeline: validate, decompose when dim g' is 1 or 2, geometry,
/// soliton methods, discrepancy list.  Throws InvalidAlgebra / MetricNotSpd
/// on mathematically invalid input.
OrderedJson analyze_report(const InputDocument& doc, const AnalyzeOptions& options);

/// Catalog pipeline: build the family, run analyze_report, append the
/// published-versus-computed comparison.
OrderedJson catalog_report(const FamilySpec& spec, const AnalyzeOptions& options);

/// Renders a report as JSON (byte-stable) or Markdown tables.
std::string format_report(const OrderedJson& report, const std::string& format);

/// Entry point shared by the binary and the tests; returns the process exit
/// code (0 success, 1 invalid mathematics, 2 usage/IO).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liegeo

#endif
