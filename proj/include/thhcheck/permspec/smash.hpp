#pragma once

#include <cstddef>
#include <vector>

#include "thhcheck/permspec/diagram.hpp"

namespace thhcheck::permspec {

/// A triple (alpha: n_1 |_| n_2 -> n, x in X(n_1), y in Y(n_2)) with x, y
/// not the basepoint.
struct SmashTriple {
  Injection alpha;
  int n1;
  int x;
  int y;

  int n2() const noexcept { return alpha.source() - n1; }
};

/// Level n of the smash product skeleton: triples modulo
/// (alpha o (b_1 |_| b_2), x, y) ~ (alpha, b_1 x, b_2 y). The complement of
/// alpha's image carries no data here. Class 0 is the basepoint.
class SymSeqLevel {
 public:
  int level() const noexcept { return level_; }
  const std::vector<SmashTriple>& triples() const noexcept { return triples_; }
  /// Includes the basepoint class.
  std::size_t class_count() const noexcept { return class_count_; }

  /// Canonical class of a triple; 0 if x or y is the basepoint.
  std::size_t class_of(const Injection& alpha, int n1, int x, int y) const;
  std::size_t class_of_triple(std::size_t i) const { return representative_.at(i + 1); }

 private:
  friend SymSeqLevel smash_level(const TruncatedIDiagram& X, const TruncatedIDiagram& Y, int n);

  std::size_t index_of(const Injection& alpha, int n1, int x, int y) const;

  int level_ = 0;
  std::vector<SmashTriple> triples_;
  std::vector<std::size_t> representative_;  // [0] is the basepoint
  std::vector<std::size_t> first_;           // first triple index per (n1, n2, alpha rank)
  std::vector<int> x_count_;                 // |X(n1)| - 1 per n1
  std::vector<int> y_count_;
  std::size_t class_count_ = 0;
};

/// Throws DiagramError if n exceeds either truncation.
SymSeqLevel smash_level(const TruncatedIDiagram& X, const TruncatedIDiagram& Y, int n);

/// The class of (id, x, y) at level n_1 + n_2 = s.level().
std::size_t canonical_smash_map(const SymSeqLevel& s, int n1, int x, int y);

}  // namespace thhcheck::permspec
