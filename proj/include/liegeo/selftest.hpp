#ifndef LIEGEO_SELFTEST_HPP
#define LIEGEO_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace liegeo {

struct PropertyOptions {
  uint64_t seed = 20250101;
  int trials = 200;
  double tolerance = 1e-8;
};

struct PropertyResult {
  std::string name;
  bool pass = false;
  double worst_residual = 0.0;
  int checks = 0;
};

/// Seeded randomized battery of the cross-module invariants; the CLI
/// selftest command and the acceptance suite both run it.
std::vector<PropertyResult> run_property_suite(const PropertyOptions& options);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace liegeo

#endif
