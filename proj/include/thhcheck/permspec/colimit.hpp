#pragma once

#include <cstddef>
#include <vector>

#include "thhcheck/permspec/diagram.hpp"

namespace thhcheck::permspec {

/// The colimit of a truncated diagram as a partition of the disjoint union
/// of its levels. Elements are numbered level by level; each class is
/// represented by its least element.
class QuotientClasses {
 public:
  std::size_t global_index(int n, int x) const {
    return offsets_.at(static_cast<std::size_t>(n)) + static_cast<std::size_t>(x);
  }
  std::size_t class_of(int n, int x) const { return representative_.at(global_index(n, x)); }
  bool same_class(int n, int x, int m, int y) const { return class_of(n, x) == class_of(m, y); }
  std::size_t class_count() const noexcept { return class_count_; }
  std::size_t element_count() const noexcept { return representative_.size(); }

 private:
  friend QuotientClasses truncated_colim(const TruncatedIDiagram& d);

  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> representative_;
  std::size_t class_count_ = 0;
};

/// Identifies x with its image under every generator. Throws DiagramError
/// carrying the first failing relation if the diagram is not functorial.
QuotientClasses truncated_colim(const TruncatedIDiagram& d);

}  // namespace thhcheck::permspec
