#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "thhcheck/error.hpp"
#include "thhcheck/permspec/colimit.hpp"
#include "thhcheck/permspec/diagram.hpp"
#include "thhcheck/verifier/run.hpp"

using namespace thhcheck;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

json colim_report(const std::string& diagram, int bound) {
  permspec::TruncatedIDiagram d = [&] {
    std::ifstream in(diagram);
    if (in) return permspec::load_diagram(json::parse(in, nullptr, true, true));
    return permspec::builtin_diagram(diagram, bound);
  }();
  const permspec::QuotientClasses q = permspec::truncated_colim(d);
  std::map<std::size_t, json> classes;
  for (int n = 0; n <= d.bound(); ++n) {
    for (int x = 0; x < d.level_size(n); ++x) {
      classes[q.class_of(n, x)].push_back({{"level", n}, {"element", d.name(n, x)}});
    }
  }
  json list = json::array();
  for (auto& [rep, members] : classes) list.push_back(std::move(members));
  return {{"check", "colim"},
          {"diagram", diagram},
          {"bound", d.bound()},
          {"element_count", q.element_count()},
          {"class_count", q.class_count()},
          {"classes", list},
          {"passed", true}};
}

void emit(const json& report, const std::string& path) {
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!path.empty()) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw verifier::UsageError("cannot write " + path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive and sampled checks of the twisted cyclic bar construction"};
  verifier::CheckConfig config;
  std::string json_path;
  std::string diagram = "sphere-model";
  int bound = 3;
  int n0 = 0;
  int n1 = 0;

  std::vector<std::string> choices = verifier::check_names();
  choices.push_back("all");
  choices.push_back("colim");
  app.add_option("check", config.check, "check to run")->required()->check(CLI::IsMember(choices));
  app.add_option("--max-k", config.max_k, "largest simplicial degree")->capture_default_str();
  app.add_option("--max-n", config.max_n, "largest tuple entry")->capture_default_str();
  app.add_option("--extra-len", config.max_extra_length, "extra factorization length")->capture_default_str();
  app.add_option("--trunc", config.trunc, "truncation level")->capture_default_str();
  app.add_option("--seed", config.seed, "sampling seed")->capture_default_str();
  app.add_option("--cap", config.cap, "largest exhaustive element count")->capture_default_str();
  app.add_option("--json", json_path, "also write the report here");
  app.add_flag("--negative-control", config.negative_control, "use the untwisted last face");
  app.add_flag("--timing", config.timing, "record elapsed_ms (otherwise 0)");
  app.add_option("--n0", n0, "first block size for counterexample");
  app.add_option("--n1", n1, "second block size for counterexample");
  app.add_option("--smash-level", config.smash_level, "largest smash level")->capture_default_str();
  app.add_option("--diagram", diagram, "colim: built-in name or JSON file")->capture_default_str();
  app.add_option("--bound", bound, "colim: truncation of a built-in diagram")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (app.count("--n0")) config.n0 = n0;
  if (app.count("--n1")) config.n1 = n1;

  try {
    if (config.check == "colim") {
      emit(colim_report(diagram, bound), json_path);
      return 0;
    }
    if (config.check == "all") {
      const auto all = verifier::run_all(config, verifier::worker_count());
      emit(all.to_json(), json_path);
      for (const auto& r : all.checks) {
        std::cerr << r.check << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.report.instances_checked
                  << " instances)\n";
      }
      return all.passed() ? 0 : 1;
    }
    const auto r = verifier::run_check(config);
    emit(r.to_json(), json_path);
    return r.passed() ? 0 : 1;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "; suggested maximum " << e.suggested_max() << "\n";
  } catch (const permspec::DiagramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.witness().is_null()) std::cerr << "witness: " << e.witness().dump() << "\n";
  } catch (const verifier::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
