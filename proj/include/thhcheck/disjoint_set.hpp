#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace thhcheck {

// Union-find whose root is always the least element of its class, so the
// representative does not depend on the order in which unions happen.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t size() const noexcept { return parent_.size(); }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns true if x and y were in different classes.
  bool unite(std::size_t x, std::size_t y) {
    std::size_t rx = find(x);
    std::size_t ry = find(y);
    if (rx == ry) return false;
    if (ry < rx) std::swap(rx, ry);
    parent_[ry] = rx;
    return true;
  }

  bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace thhcheck
