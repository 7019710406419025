#pragma once

#include <span>

#include "json.hpp"
#include "thhcheck/fincat/injection.hpp"
#include "thhcheck/fincat/simplex.hpp"

// Witness serialization: permutations as 1-indexed image arrays, injections
// as {"target", "images"}, monotone maps as {"target", "values"} with
// 0-indexed values.
namespace thhcheck::fincat {

inline nlohmann::json images_json(std::span<const int> images) {
  return nlohmann::json(std::vector<int>(images.begin(), images.end()));
}

inline void to_json(nlohmann::json& j, const Permutation& p) { j = images_json(p.images()); }

inline void to_json(nlohmann::json& j, const Injection& f) {
  j = nlohmann::json{{"target", f.target()}, {"images", images_json(f.images())}};
}

inline void to_json(nlohmann::json& j, const MonotoneMap& a) {
  j = nlohmann::json{{"target", a.target()}, {"values", images_json(a.values())}};
}

inline void to_json(nlohmann::json& j, const SimplicialWord& w) { j = w.to_string(); }

}  // namespace thhcheck::fincat
