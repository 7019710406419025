#include "thhcheck/verifier/run.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <thread>

#include "thhcheck/bcy/comma.hpp"
#include "thhcheck/bcy/verify.hpp"
#include "thhcheck/permspec/verify.hpp"

namespace thhcheck::verifier {

using nlohmann::json;

json CheckConfig::to_json() const {
  json out = {{"max_k", max_k}, {"max_n", max_n}, {"max_extra_length", max_extra_length}, {"trunc", trunc},
              {"cap", cap},     {"seed", seed},   {"negative_control", negative_control}, {"smash_level", smash_level}};
  if (n0) out["n0"] = *n0;
  if (n1) out["n1"] = *n1;
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "simplicial-identities", "cyclic-identities", "twist-well-defined", "mu-tw-functor",  "twist-naturality",
      "counterexample",        "colim-fix",         "comma-components",   "smash-skeleton", "injection-counts"};
  return names;
}

void validate(const CheckConfig& config) {
  const auto& names = check_names();
  if (config.check != "all" && std::find(names.begin(), names.end(), config.check) == names.end()) {
    throw UsageError("unknown check '" + config.check + "'");
  }
  auto non_negative = [](const char* name, int v) {
    if (v < 0) throw UsageError(std::string(name) + " must be non-negative");
  };
  non_negative("--max-k", config.max_k);
  non_negative("--max-n", config.max_n);
  non_negative("--extra-len", config.max_extra_length);
  non_negative("--smash-level", config.smash_level);
  if (config.trunc < 1) throw UsageError("--trunc must be positive");
  if (config.cap < 1) throw UsageError("--cap must be positive");
  if (config.n0.has_value() != config.n1.has_value()) throw UsageError("--n0 and --n1 go together");
  if (config.n0 && (*config.n0 < 0 || *config.n1 < 0)) throw UsageError("--n0 and --n1 must be non-negative");
}

json CheckReport::to_json() const {
  json out = {{"check", check},
              {"config", config},
              {"instances_checked", report.instances_checked},
              {"pre_quotient_mismatches", nullptr},
              {"violations", report.violations},
              {"violation_count", report.violation_count},
              {"passed", report.passed()},
              {"elapsed_ms", elapsed_ms}};
  if (report.pre_quotient_mismatches) out["pre_quotient_mismatches"] = *report.pre_quotient_mismatches;
  if (report.value) out["value"] = *report.value;
  if (!report.details.is_null()) out["details"] = report.details;
  return out;
}

namespace {

// Longest tuple length l + 1 whose entries <= max_n fit under trunc.
int colim_degree(const CheckConfig& c) {
  if (c.max_n == 0) return std::max(c.max_k, 1);
  return std::clamp(c.trunc / c.max_n - 1, 1, std::max(c.max_k, 1));
}

Report dispatch(const CheckConfig& c) {
  const bcy::TwistMode mode = c.negative_control ? bcy::TwistMode::Untwisted : bcy::TwistMode::Twisted;
  const std::string& name = c.check;
  if (name == "simplicial-identities") return bcy::verify_simplicial_identities(c.max_k, c.max_n, mode);
  if (name == "cyclic-identities") return bcy::verify_cyclic_identities(c.max_k, c.max_n, mode);
  if (name == "twist-well-defined") return bcy::verify_twist_well_defined(c.max_k, c.max_n, c.max_extra_length, mode);
  if (name == "mu-tw-functor") {
    bcy::FunctorSweep sweep;
    sweep.max_k = c.max_k;
    sweep.max_n = c.max_n;
    sweep.seed = c.seed;
    sweep.mode = mode;
    return bcy::verify_mu_tw_functor(sweep);
  }
  if (name == "twist-naturality") return bcy::verify_twist_naturality(c.max_k, c.max_n, c.max_n, mode);
  if (name == "counterexample") {
    if (c.n0) return permspec::verify_counterexample(*c.n0, *c.n1, c.cap, c.seed);
    return permspec::verify_counterexample_sweep(c.trunc, c.cap, c.seed);
  }
  if (name == "colim-fix") return permspec::verify_colim_fix(colim_degree(c), c.max_n, c.trunc, c.cap, c.seed);
  if (name == "comma-components") {
    if (c.max_n < 1) throw UsageError("comma-components needs --max-n >= 1");
    return bcy::verify_comma_components(c.max_n);
  }
  if (name == "smash-skeleton") return permspec::verify_smash_skeleton(c.smash_level);
  if (name == "injection-counts") return permspec::verify_injection_counts(c.trunc);
  throw UsageError("unknown check '" + name + "'");
}

std::int64_t millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

CheckReport run_check(const CheckConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  CheckReport out;
  out.check = config.check;
  out.config = config.to_json();
  out.report = dispatch(config);
  if (config.timing) out.elapsed_ms = millis_since(start);
  return out;
}

bool AggregateReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& r) { return r.passed(); });
}

json AggregateReport::to_json() const {
  Report total;
  json reports = json::array();
  json violations = json::array();
  for (const auto& c : checks) {
    total.merge(c.report);
    reports.push_back(c.to_json());
    for (const auto& v : c.report.violations) {
      if (violations.size() < Report::kMaxWitnesses) violations.push_back({{"check", c.check}, {"witness", v}});
    }
  }
  json out = {{"check", "all"},
              {"config", config},
              {"instances_checked", total.instances_checked},
              {"pre_quotient_mismatches", nullptr},
              {"violations", violations},
              {"violation_count", total.violation_count},
              {"passed", passed()},
              {"elapsed_ms", elapsed_ms},
              {"reports", reports}};
  if (total.pre_quotient_mismatches) out["pre_quotient_mismatches"] = *total.pre_quotient_mismatches;
  return out;
}

AggregateReport run_all(const CheckConfig& config, int workers) {
  CheckConfig base = config;
  base.check = "all";
  validate(base);
  const auto start = std::chrono::steady_clock::now();
  const auto& names = check_names();
  AggregateReport out;
  out.config = base.to_json();
  out.checks.resize(names.size());
  std::vector<std::exception_ptr> errors(names.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) {
      try {
        CheckConfig c = base;
        c.check = names[i];
        out.checks[i] = run_check(c);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(workers, 1, static_cast<int>(names.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  if (config.timing) out.elapsed_ms = millis_since(start);
  return out;
}

int worker_count() {
  if (const char* env = std::getenv("VERIFY_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 64L));
    throw UsageError("VERIFY_WORKERS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace thhcheck::verifier
