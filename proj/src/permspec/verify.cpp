#include "thhcheck/permspec/verify.hpp"

#include <map>
#include <numeric>
#include <set>

#include "thhcheck/error.hpp"
#include "thhcheck/fincat/json_io.hpp"
#include "thhcheck/permspec/colimit.hpp"
#include "thhcheck/permspec/element.hpp"
#include "thhcheck/permspec/smash.hpp"
#include "thhcheck/sweep.hpp"

namespace thhcheck::permspec {

using fincat::block_permutation;
using nlohmann::json;

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

// All permutations of n if there are at most `cap`, else `cap` seeded draws.
template <class Body>
void for_each_element(int n, std::uint64_t cap, std::uint64_t seed, Body body) {
  const std::uint64_t count = factorial(n);
  if (count <= cap) {
    for (const auto& p : fincat::enumerate_permutations(n)) body(p);
    return;
  }
  SplitMix64 rng(seed);
  for (std::uint64_t r = 0; r < cap; ++r) {
    body(Permutation(fincat::injection_unrank(n, n, static_cast<std::size_t>(rng() % count))));
  }
}

Report counterexample(const TruncatedIDiagram& model, int n0, int n1, std::uint64_t cap, std::uint64_t seed) {
  Report report;
  const Permutation tau = block_permutation(n0, n1);
  std::uint64_t disagreeing = 0;
  json witness = nullptr;
  for_each_element(n0 + n1, cap, mix_seed(seed, static_cast<std::uint64_t>(n0 * 64 + n1)), [&](const Permutation& f) {
    ++report.instances_checked;
    const PermElement x({n0, n1}, f);
    const PermElement upper = upper_composite(x);
    const PermElement lower = lower_composite(x);
    const int pushed = model.act(tau.as_injection(), sphere_element(model, upper.perm));
    if (pushed != sphere_element(model, lower.perm)) {
      report.record_violation([&]() -> nlohmann::json {
        return {{"n0", n0},
                {"n1", n1},
                {"f", f},
                {"upper", upper.perm},
                {"lower", lower.perm},
                {"tau_pushforward_of_upper", model.name(n0 + n1, pushed)}};
      });
    }
    const LastFaceImages images = general_lastface_mismatch(1, {n0, n1}, x);
    if (images.straight != upper.perm || images.pushed != lower.perm) {
      report.record_violation([&]() -> nlohmann::json {
        return {{"n0", n0}, {"n1", n1}, {"f", f}, {"last_face_images_differ_from_upper_lower", true}};
      });
    }
    if (upper.perm != lower.perm) {
      if (disagreeing++ == 0) witness = {{"f", f}, {"upper", upper.perm}, {"lower", lower.perm}};
    }
  });
  if (!tau.is_identity() && disagreeing == 0) {
    report.record_violation([&]() -> nlohmann::json { return {{"n0", n0}, {"n1", n1}, {"missing_witness", true}}; });
  }
  report.details = {{"n0", n0}, {"n1", n1}, {"disagreeing", disagreeing}, {"witness", witness}};
  return report;
}

}  // namespace

Report verify_counterexample(int n0, int n1, std::uint64_t cap, std::uint64_t seed) {
  require_bound("n0", n0, 7);
  require_bound("n1", n1, 7 - n0);
  const TruncatedIDiagram model = sphere_model(n0 + n1, n0 + n1);
  return counterexample(model, n0, n1, cap, seed);
}

Report verify_counterexample_sweep(int max_total, std::uint64_t cap, std::uint64_t seed) {
  require_bound("max_total", max_total, 7);
  const TruncatedIDiagram model = sphere_model(max_total, max_total);
  Report report;
  json pairs = json::array();
  for (int total = 0; total <= max_total; ++total) {
    for (int n0 = 0; n0 <= total; ++n0) {
      const Report r = counterexample(model, n0, total - n0, cap, seed);
      report.merge(r);
      pairs.push_back(r.details);
    }
  }
  report.details = {{"max_total", max_total}, {"pairs", pairs}};
  return report;
}

Report verify_colim_fix(int max_l, int max_n, int trunc, std::uint64_t cap, std::uint64_t seed) {
  require_bound("max_l", max_l, 6);
  require_bound("trunc", trunc, 7);
  if (max_n < 0) throw std::invalid_argument("max_n must be non-negative");
  if ((max_l + 1) * max_n > trunc) {
    throw BoundError(
        "tuples with entries <= " + std::to_string(max_n) + " exceed the truncation " + std::to_string(trunc),
        trunc / (max_l + 1));
  }
  const TruncatedIDiagram model = sphere_model(trunc, trunc);
  const QuotientClasses classes = truncated_colim(model);
  Report report;
  report.pre_quotient_mismatches = 0;
  std::uint64_t tuples = 0;
  for (int l = 1; l <= max_l; ++l) {
    std::vector<int> tuple(static_cast<std::size_t>(l + 1), 0);
    while (true) {
      ++tuples;
      const int total = std::accumulate(tuple.begin(), tuple.end(), 0);
      for_each_element(total, cap, mix_seed(seed, tuples), [&](const Permutation& p) {
        ++report.instances_checked;
        const LastFaceImages images = general_lastface_mismatch(l, tuple, PermElement(tuple, p));
        const int straight = sphere_element(model, images.straight);
        const int pushed = sphere_element(model, images.pushed);
        if (straight != pushed) ++*report.pre_quotient_mismatches;
        if (!classes.same_class(total, straight, total, pushed)) {
          report.record_violation([&]() -> nlohmann::json {
            return {{"l", l}, {"tuple", tuple}, {"x", p}, {"straight", images.straight}, {"pushed", images.pushed}};
          });
        }
      });
      int pos = l;
      while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == max_n) tuple[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++tuple[static_cast<std::size_t>(pos)];
    }
  }
  report.details = {{"max_l", max_l},
                    {"max_n", max_n},
                    {"trunc", trunc},
                    {"tuples", tuples},
                    {"colimit_elements", classes.element_count()},
                    {"colimit_classes", classes.class_count()}};
  return report;
}

namespace {

struct Named {
  std::string name;
  TruncatedIDiagram diagram;
};

// Checks that f, given on triples, induces a bijection on classes.
template <class Map>
void check_class_bijection(Report& report, const SymSeqLevel& from, const SymSeqLevel& to, Map f, json context) {
  std::map<std::size_t, std::size_t> image;
  image[0] = 0;
  bool ok = from.class_count() == to.class_count();
  for (std::size_t i = 0; i < from.triples().size() && ok; ++i) {
    ++report.instances_checked;
    const std::size_t target = f(from.triples()[i]);
    const auto [it, fresh] = image.emplace(from.class_of_triple(i), target);
    if (!fresh && it->second != target) ok = false;
  }
  std::set<std::size_t> values;
  for (const auto& [k, v] : image) values.insert(v);
  if (!ok || values.size() != image.size() || image.size() != from.class_count()) {
    context["from_classes"] = from.class_count();
    context["to_classes"] = to.class_count();
    report.record_violation([&]() -> nlohmann::json { return std::move(context); });
  }
}

}  // namespace

Report verify_smash_skeleton(int max_level) {
  require_bound("max_level", max_level, 4);
  Report report;
  std::vector<Named> diagrams;
  diagrams.push_back({"unit", unit_diagram(max_level)});
  diagrams.push_back({"free(1)", free_diagram(1, max_level)});
  diagrams.push_back({"free(2)", free_diagram(2, max_level)});
  diagrams.push_back({"conjugation-model", conjugation_model(max_level)});
  const TruncatedIDiagram& unit = diagrams[0].diagram;

  json unit_counts = json::array();
  for (const auto& [name, X] : diagrams) {
    for (int n = 0; n <= max_level; ++n) {
      ++report.instances_checked;
      const auto right = smash_level(X, unit, n).class_count();
      const auto left = smash_level(unit, X, n).class_count();
      const auto expected = static_cast<std::size_t>(X.level_size(n));
      if (right != expected || left != expected) {
        report.record_violation([&]() -> nlohmann::json {
          return {{"unit_law", name}, {"level", n}, {"level_size", expected}, {"x_unit", right}, {"unit_x", left}};
        });
      }
    }
  }

  for (const auto& [xname, X] : diagrams) {
    for (const auto& [yname, Y] : diagrams) {
      for (int n = 0; n <= max_level; ++n) {
        const SymSeqLevel xy = smash_level(X, Y, n);
        const SymSeqLevel yx = smash_level(Y, X, n);
        check_class_bijection(report, xy, yx,
                              [&](const SmashTriple& t) {
                                const Injection swapped =
                                    compose(t.alpha, block_permutation(t.n2(), t.n1).as_injection());
                                return yx.class_of(swapped, t.n2(), t.y, t.x);
                              },
                              {{"swap", {xname, yname}}, {"level", n}});
        for (int i = 1; i < n; ++i) {
          const Injection s = fincat::adjacent_transposition(n, i).as_injection();
          check_class_bijection(report, xy, xy,
                                [&](const SmashTriple& t) { return xy.class_of(compose(s, t.alpha), t.n1, t.x, t.y); },
                                {{"permutation_action", {xname, yname}}, {"level", n}, {"s", i}});
        }
      }

      // Naturality of the canonical map under b_1 |_| b_2.
      for (int n1 = 0; n1 <= max_level; ++n1) {
        for (int n2 = 0; n1 + n2 <= max_level; ++n2) {
          for (int m1 = n1; m1 <= max_level; ++m1) {
            for (int m2 = n2; m1 + m2 <= max_level; ++m2) {
              const SymSeqLevel target = smash_level(X, Y, m1 + m2);
              for (const auto& b1 : fincat::enumerate_injections(n1, m1)) {
                for (const auto& b2 : fincat::enumerate_injections(n2, m2)) {
                  for (int x = 0; x < X.level_size(n1); ++x) {
                    for (int y = 0; y < Y.level_size(n2); ++y) {
                      ++report.instances_checked;
                      const std::size_t direct = canonical_smash_map(target, m1, X.act(b1, x), Y.act(b2, y));
                      const std::size_t moved = target.class_of(fincat::concat(b1, b2), n1, x, y);
                      if (direct != moved) {
                        report.record_violation([&]() -> nlohmann::json {
                          return {{"naturality", {xname, yname}},
                                  {"b1", b1},
                                  {"b2", b2},
                                  {"x", X.name(n1, x)},
                                  {"y", Y.name(n2, y)}};
                        });
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  // free(a) ^ free(b) is free(a + b).
  json free_counts = json::array();
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      const TruncatedIDiagram X = free_diagram(a, max_level);
      const TruncatedIDiagram Y = free_diagram(b, max_level);
      for (int n = 0; n <= max_level; ++n) {
        ++report.instances_checked;
        const std::size_t non_base = smash_level(X, Y, n).class_count() - 1;
        const std::uint64_t expected = fincat::count_injections(a + b, n);
        if (non_base != expected) {
          report.record_violation([&]() -> nlohmann::json {
            return {{"free", {a, b}}, {"level", n}, {"non_base_classes", non_base}, {"expected", expected}};
          });
        }
        if (a == 1 && b == 1 && n == 2) report.value = static_cast<std::int64_t>(non_base);
      }
    }
  }
  report.details = {{"max_level", max_level}};
  return report;
}

Report verify_injection_counts(int max_n) {
  require_bound("max_n", max_n, 8);
  Report report;
  json table = json::array();
  for (int n = 0; n <= max_n; ++n) {
    json row = json::array();
    for (int m = 0; m <= n; ++m) {
      ++report.instances_checked;
      const auto listed = static_cast<std::uint64_t>(fincat::enumerate_injections(m, n).size());
      const std::uint64_t formula = factorial(n) / factorial(n - m);
      row.push_back(listed);
      if (listed != formula || (m == 0 && listed != 1)) {
        report.record_violation(
            [&]() -> nlohmann::json { return {{"m", m}, {"n", n}, {"enumerated", listed}, {"formula", formula}}; });
      }
    }
    table.push_back(row);
  }
  report.details = {{"max_n", max_n}, {"counts", table}};
  return report;
}

}  // namespace thhcheck::permspec
