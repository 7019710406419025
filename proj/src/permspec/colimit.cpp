#include "thhcheck/permspec/colimit.hpp"

#include "thhcheck/disjoint_set.hpp"

namespace thhcheck::permspec {

QuotientClasses truncated_colim(const TruncatedIDiagram& d) {
  const Report check = validate_presentation(d);
  if (!check.passed()) throw DiagramError("diagram is not functorial", check.violations.front());

  QuotientClasses q;
  std::size_t total = 0;
  for (int n = 0; n <= d.bound(); ++n) {
    q.offsets_.push_back(total);
    total += static_cast<std::size_t>(d.level_size(n));
  }
  DisjointSet classes(total);
  for (int n = 0; n <= d.bound(); ++n) {
    for (int x = 0; x < d.level_size(n); ++x) {
      const std::size_t here = q.global_index(n, x);
      for (int i = 1; i < n; ++i) classes.unite(here, q.global_index(n, d.transpose(n, i, x)));
      if (n < d.bound()) classes.unite(here, q.global_index(n + 1, d.include(n, x)));
    }
  }
  q.representative_.resize(total);
  for (std::size_t i = 0; i < total; ++i) {
    q.representative_[i] = classes.find(i);
    if (q.representative_[i] == i) ++q.class_count_;
  }
  return q;
}

}  // namespace thhcheck::permspec
