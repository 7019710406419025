#include "thhcheck/permspec/element.hpp"

#include <numeric>

#include "thhcheck/error.hpp"

namespace thhcheck::permspec {

using fincat::block_permutation;

PermElement::PermElement(std::vector<int> b, Permutation p) : blocks(std::move(b)), perm(std::move(p)) {
  int sum = 0;
  for (int n : blocks) {
    if (n < 0) throw ArityError("block sizes must be non-negative");
    sum += n;
  }
  if (sum != perm.degree()) {
    throw ArityError("permutation of degree " + std::to_string(perm.degree()) + " on blocks summing to " +
                     std::to_string(sum));
  }
}

namespace {

void require_two_blocks(const PermElement& f) {
  if (f.blocks.size() != 2) throw ArityError("expected exactly two blocks, got " + std::to_string(f.blocks.size()));
}

}  // namespace

PermElement upper_composite(const PermElement& f) {
  require_two_blocks(f);
  const int n0 = f.blocks[0];
  const int n1 = f.blocks[1];
  return PermElement({n0 + n1}, compose(block_permutation(n0, n1), f.perm));
}

PermElement lower_composite(const PermElement& f) {
  require_two_blocks(f);
  const int n0 = f.blocks[0];
  const int n1 = f.blocks[1];
  return PermElement({n1 + n0}, compose(compose(block_permutation(n0, n1), f.perm), block_permutation(n1, n0)));
}

LastFaceImages general_lastface_mismatch(int l, const std::vector<int>& tuple, const PermElement& x) {
  if (l < 1) throw IndexError("the last face needs degree >= 1");
  if (static_cast<int>(tuple.size()) != l + 1) {
    throw ArityError("expected " + std::to_string(l + 1) + " entries, got " + std::to_string(tuple.size()));
  }
  if (x.blocks != tuple) throw ArityError("element blocks do not match the tuple");
  const int front = std::accumulate(tuple.begin(), tuple.end() - 1, 0);
  const Permutation tau = block_permutation(front, tuple.back());
  const Permutation straight = compose(tau, x.perm);
  return {straight, compose(straight, tau.inverse())};
}

}  // namespace thhcheck::permspec
