#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "thhcheck/fincat/injection.hpp"
#include "thhcheck/report.hpp"

namespace thhcheck::permspec {

using fincat::Injection;
using fincat::Permutation;

// A diagram that is malformed or fails a functoriality relation. `witness`
// names the offending generator(s) and element.
class DiagramError : public std::invalid_argument {
 public:
  DiagramError(const std::string& what, nlohmann::json witness = {})
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const nlohmann::json& witness() const noexcept { return witness_; }

 private:
  nlohmann::json witness_;
};

/// A functor from the injections between sets of size <= bound into finite
/// pointed sets. Element 0 of every level is the basepoint "*".
///
/// Only the generators are stored: the adjacent transpositions s_i of each
/// n (swapping i and i+1) and the standard inclusions n -> n+1. Any other
/// injection h acts through h = canonical_extension(h) o (inclusions).
class TruncatedIDiagram {
 public:
  /// `levels[n]` lists the non-base elements of X(n); every generator action
  /// starts out sending everything to the basepoint.
  TruncatedIDiagram(int bound, std::vector<std::vector<std::string>> levels);

  int bound() const noexcept { return bound_; }
  int level_size(int n) const { return static_cast<int>(names_.at(static_cast<std::size_t>(n)).size()); }
  const std::string& name(int n, int x) const;
  /// Index of the element called `name` in X(n); throws DiagramError if absent.
  int find(int n, std::string_view name) const;

  /// s_i on X(n), 1 <= i < n.
  void set_transposition(int n, int i, std::vector<int> images);
  /// The inclusion X(n) -> X(n+1).
  void set_inclusion(int n, std::vector<int> images);

  int transpose(int n, int i, int x) const;
  int include(int n, int x) const;

  /// The action of an arbitrary injection h: m -> n on x in X(m).
  int act(const Injection& h, int x) const;

  /// Actions listed explicitly for non-generator injections (from JSON);
  /// validate_presentation compares them with act().
  struct ListedAction {
    Injection map;
    std::vector<int> images;
  };
  void add_listed_action(Injection map, std::vector<int> images);
  const std::vector<ListedAction>& listed_actions() const noexcept { return listed_; }

 private:
  void check_table(int from, int to, const std::vector<int>& images) const;

  int bound_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<int>>> transpositions_;  // [n][i - 1][x]
  std::vector<std::vector<int>> inclusions_;                   // [n][x]
  std::vector<ListedAction> listed_;
};

/// Relations presenting the injection category on the stored generators:
/// s_i s_i = 1, the braid relation, s_i s_j = s_j s_i for |i - j| >= 2,
/// inclusion o s_i = s_i o inclusion, s_(n+1) o inclusion o inclusion =
/// inclusion o inclusion, and basepoints fixed. Also checks listed actions.
Report validate_presentation(const TruncatedIDiagram& d);

/// act(g o f) = act(g) o act(f) and act(id) = id for every composable pair
/// of injections between sets of size <= max_level.
Report validate_functoriality(const TruncatedIDiagram& d, int max_level);

/// Label vectors: X(n) holds maps {1..n} -> {0..labels}, injective on the
/// nonzero labels (0 is blank). sigma acts by lambda |-> lambda o sigma^-1,
/// inclusions add a blank position. A permutation p of n is the element
/// with labels p(1), ..., p(n).
TruncatedIDiagram sphere_model(int bound, int labels);
/// Element of X(n) in sphere_model carrying the labels of p.
int sphere_element(const TruncatedIDiagram& d, const Permutation& p);

/// X(n) = permutations of n; injections act by conjugation on their image
/// and by the identity on the complement.
TruncatedIDiagram conjugation_model(int bound);

/// X(n) = injections m -> n, acted on by postcomposition.
TruncatedIDiagram free_diagram(int m, int bound);
/// The free diagram on a point of level 0.
TruncatedIDiagram unit_diagram(int bound);

/// "sphere-model", "conjugation-model", "unit" or "free(m)".
TruncatedIDiagram builtin_diagram(std::string_view name, int bound);

/// {"bound": N, "levels": {"n": ["elt", ...]}, "actions": [{"from": m,
/// "to": n, "images": [...], "map": {"elt": "elt"}}]}; "*" is the basepoint.
/// Every generator needs an action; other listed actions are checked later.
TruncatedIDiagram load_diagram(const nlohmann::json& description);

}  // namespace thhcheck::permspec
