// Runs the verify binary at default bounds and checks each acceptance
// criterion against its reports. Prints one line per criterion.

#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

std::string verify_exe = VERIFY_EXE;

Run run(const std::string& args) {
  const std::string command = verify_exe + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buffer[1 << 14];
  for (std::size_t n; (n = fread(buffer, 1, sizeof buffer, pipe)) > 0;) r.out.append(buffer, n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse(const Run& r) {
  try {
    return json::parse(r.out);
  } catch (const json::exception&) {
    return json::object();
  }
}

// j[key] if j is an object holding key, else null.
json get(const json& j, const char* key) { return j.is_object() && j.contains(key) ? j[key] : json(); }

json find_report(const json& all, const std::string& check) {
  const json reports = get(all, "reports");
  if (reports.is_array()) {
    for (const auto& r : reports) {
      if (get(r, "check") == check) return r;
    }
  }
  return json::object();
}

bool clean(const json& r) {
  return r.value("passed", false) && r.value("violations", json::array()).empty() &&
         r.value("instances_checked", std::uint64_t{0}) > 0;
}

bool default_bounds(const json& r) {
  const json c = get(r, "config");
  if (!c.is_object()) return false;
  return c.value("max_k", -1) == 4 && c.value("max_n", -1) == 2 && c.value("max_extra_length", -1) == 2 &&
         c.value("trunc", -1) == 6 && c.value("cap", 0) == 720 && c.value("seed", 1) == 0 &&
         !c.value("negative_control", true);
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

struct Outcome {
  bool pass;
  std::string note;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) verify_exe = argv[1];

  const Run first = run("all --seed 0");
  const Run second = run("all --seed 0");
  const json all = parse(first);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("simplicial identities, k <= 4, n_i <= 2", [&]() -> Outcome {
    const json r = find_report(all, "simplicial-identities");
    return {clean(r) && default_bounds(r), std::to_string(r.value("instances_checked", 0)) + " instances"};
  });

  criteria.emplace_back("twist well-defined, degrees <= 4, entries <= 2, extra length 2", [&]() -> Outcome {
    const json r = find_report(all, "twist-well-defined");
    return {clean(r) && default_bounds(r), std::to_string(r.value("instances_checked", 0)) + " instances"};
  });

  criteria.emplace_back("mu_tw functoriality and twist naturality", [&]() -> Outcome {
    const json f = find_report(all, "mu-tw-functor");
    const json n = find_report(all, "twist-naturality");
    return {clean(f) && clean(n) && default_bounds(f) && default_bounds(n),
            std::to_string(f.value("instances_checked", 0)) + " + " + std::to_string(n.value("instances_checked", 0)) +
                " instances"};
  });

  criteria.emplace_back("counterexample at (1,1) and witnesses up to total 5", [&]() -> Outcome {
    const json r = find_report(all, "counterexample");
    if (!clean(r)) return {false, "sweep report not clean"};
    int pairs = 0;
    for (const auto& p : get(get(r, "details"), "pairs")) {
      const int n0 = p["n0"];
      const int n1 = p["n1"];
      if (n0 >= 1 && n1 >= 1 && n0 + n1 <= 5) {
        if (p["witness"].is_null())
          return {false, "no witness at (" + std::to_string(n0) + "," + std::to_string(n1) + ")"};
        ++pairs;
      }
      if (n0 == 1 && n1 == 1) {
        const json& w = p["witness"];
        if (w.is_null() || w["f"] != json({1, 2}) || w["upper"] != json({2, 1}) || w["lower"] != json({1, 2})) {
          return {false, "wrong (1,1) witness"};
        }
      }
    }
    const Run single = run("counterexample --n0 1 --n1 1");
    const json s = parse(single);
    const bool single_ok =
        single.status == 0 && clean(s) && get(get(get(s, "details"), "witness"), "f") == json({1, 2});
    return {pairs == 10 && single_ok, std::to_string(pairs) + " pairs with a witness"};
  });

  criteria.emplace_back("colimit repair, l <= 2, entries <= 2, exhaustive", [&]() -> Outcome {
    const json r = find_report(all, "colim-fix");
    const json d = get(r, "details");
    if (!d.is_object()) return {false, "no details"};
    const bool exhaustive = get(get(r, "config"), "cap") >= factorial(6);
    const auto mismatches =
        r.value("pre_quotient_mismatches", json()).is_number() ? r["pre_quotient_mismatches"].get<std::uint64_t>() : 0;
    return {clean(r) && d.value("max_l", 0) == 2 && d.value("max_n", 0) == 2 && exhaustive && mismatches > 0,
            std::to_string(mismatches) + " pre-quotient mismatches"};
  });

  criteria.emplace_back("negative control fails with a witness", [&]() -> Outcome {
    for (const char* check : {"twist-well-defined", "mu-tw-functor"}) {
      const Run r = run(std::string(check) + " --negative-control");
      const json report = parse(r);
      if (r.status == 1 && !report.value("passed", true) && !report.value("violations", json::array()).empty()) {
        return {true, std::string(check) + " fails with " + std::to_string(report.value("violation_count", 0)) +
                          " violations"};
      }
    }
    return {false, "both checks pass without the twist"};
  });

  criteria.emplace_back("comma category has two components, N = 1..4", [&]() -> Outcome {
    const Run r = run("comma-components --max-n 4");
    const json report = parse(r);
    const json counts = get(get(report, "details"), "components_by_max_n");
    return {r.status == 0 && clean(report) && counts == json({2, 2, 2, 2}) && report.value("value", 0) == 2,
            counts.dump()};
  });

  criteria.emplace_back("|Hom(m, n)| = n!/(n-m)! for m <= n <= 6", [&]() -> Outcome {
    const json r = find_report(all, "injection-counts");
    const json counts = get(get(r, "details"), "counts");
    bool ok = clean(r) && counts.is_array() && counts.size() == 7;
    for (int n = 0; ok && n <= 6; ++n) {
      for (int m = 0; m <= n; ++m) ok = ok && counts[n][m] == factorial(n) / factorial(n - m);
      ok = ok && counts[n][0] == 1;
    }
    return {ok, ""};
  });

  criteria.emplace_back("smash skeleton: unit law, symmetry, free ^ free at level 2", [&]() -> Outcome {
    const json r = find_report(all, "smash-skeleton");
    return {clean(r) && r.value("value", 0) == 2, "non-base classes " + std::to_string(r.value("value", 0))};
  });

  criteria.emplace_back("two runs of verify all --seed 0 are byte-identical", [&]() -> Outcome {
    const bool ok = first.status == 0 && second.status == 0 && !first.out.empty() && first.out == second.out;
    return {ok, std::to_string(first.out.size()) + " bytes, exit " + std::to_string(first.status)};
  });

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
