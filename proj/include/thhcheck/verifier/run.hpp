#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "thhcheck/report.hpp"

namespace thhcheck::verifier {

// Unknown check names or out-of-range options; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CheckConfig {
  std::string check;
  int max_k = 4;
  int max_n = 2;
  int max_extra_length = 2;
  int trunc = 6;
  std::uint64_t cap = 720;
  std::uint64_t seed = 0;
  bool negative_control = false;
  std::optional<int> n0;
  std::optional<int> n1;
  int smash_level = 3;
  bool timing = false;

  nlohmann::json to_json() const;
};

const std::vector<std::string>& check_names();

/// Throws UsageError for an unknown check or a negative bound.
void validate(const CheckConfig& config);

struct CheckReport {
  std::string check;
  nlohmann::json config;
  Report report;
  std::int64_t elapsed_ms = 0;

  bool passed() const noexcept { return report.passed(); }
  nlohmann::json to_json() const;
};

/// Runs one named check. BoundError propagates.
CheckReport run_check(const CheckConfig& config);

struct AggregateReport {
  nlohmann::json config;
  std::vector<CheckReport> checks;  // in check_names() order
  std::int64_t elapsed_ms = 0;

  bool passed() const noexcept;
  nlohmann::json to_json() const;
};

/// Every check with the bounds of `config`, spread over `workers` threads.
/// The result does not depend on the worker count.
AggregateReport run_all(const CheckConfig& config, int workers);

/// VERIFY_WORKERS if set to a positive integer, else the hardware thread count.
int worker_count();

}  // namespace thhcheck::verifier
