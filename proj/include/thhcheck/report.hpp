#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

namespace thhcheck {

/// Outcome of one exhaustive or sampled sweep. Only the first
/// `kMaxWitnesses` violations are kept; `violation_count` counts all of them.
struct Report {
  static constexpr std::size_t kMaxWitnesses = 16;

  std::uint64_t instances_checked = 0;
  std::optional<std::uint64_t> pre_quotient_mismatches;
  std::optional<std::int64_t> value;
  std::uint64_t violation_count = 0;
  std::vector<nlohmann::json> violations;
  nlohmann::json details;  // check-specific extras, e.g. a witness

  bool passed() const noexcept { return violation_count == 0; }

  void add_violation(nlohmann::json witness) {
    ++violation_count;
    if (violations.size() < kMaxWitnesses) violations.push_back(std::move(witness));
  }

  // Builds the witness only while there is room for it.
  template <class Make>
  void record_violation(Make&& make) {
    ++violation_count;
    if (violations.size() < kMaxWitnesses) violations.push_back(make());
  }

  // Counts add up; witness lists concatenate up to the cap.
  void merge(const Report& other) {
    instances_checked += other.instances_checked;
    if (other.pre_quotient_mismatches) {
      pre_quotient_mismatches = pre_quotient_mismatches.value_or(0) + *other.pre_quotient_mismatches;
    }
    violation_count += other.violation_count;
    for (const auto& v : other.violations) {
      if (violations.size() >= kMaxWitnesses) break;
      violations.push_back(v);
    }
  }
};

}  // namespace thhcheck
