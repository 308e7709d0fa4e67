#ifndef NCC_VERIFY_HPP
#define NCC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncc/numerics.hpp"

namespace ncc {

struct VerifyConfig {
  Tolerances tol;
  std::uint64_t seed = 0;
  int samples = 1000;  // scales every randomized check
  int grid = 100;      // side of the de Sitter grid
  double tmax = 20.0;
};

struct CheckResult {
  std::string id;
  long total = 0;
  long failures = 0;
  long boundary = 0;  // inside the band, not counted in total
  double max_residual = 0.0;
  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Runs one property suite ("grading", "cones", "jts", "flows", "desitter",
/// "atlas"). Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace ncc

#endif  // NCC_VERIFY_HPP
