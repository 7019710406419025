#pragma once

#include <vector>

#include "thhcheck/fincat/injection.hpp"

namespace thhcheck::permspec {

using fincat::Permutation;

/// A point f: S^(n_0 |_| ... |_| n_k) -> M_(n_0) ^ R_(n_1) ^ ... in the
/// sphere model, recorded by the coordinate permutation it induces.
struct PermElement {
  std::vector<int> blocks;
  Permutation perm;

  /// Throws ArityError unless perm.degree() is the sum of the blocks.
  PermElement(std::vector<int> blocks, Permutation perm);

  int total() const noexcept { return perm.degree(); }
  friend bool operator==(const PermElement&, const PermElement&) = default;
};

/// Comparison map, then the last face: tau_(n_0, n_1) o f, one block n_0 + n_1.
PermElement upper_composite(const PermElement& f);
/// Last face, then the comparison map: tau_(n_0, n_1) o f o tau_(n_1, n_0),
/// one block n_1 + n_0.
PermElement lower_composite(const PermElement& f);

/// The two images of x under the last face in degree l: the straight one,
/// tau o x with tau = tau_(n_0 |_| ... |_| n_(l-1), n_l), and its pushforward
/// along tau in the sphere model, tau o x o tau^-1. For l = 1 these are the
/// upper and lower composites.
struct LastFaceImages {
  Permutation straight;
  Permutation pushed;
};
LastFaceImages general_lastface_mismatch(int l, const std::vector<int>& tuple, const PermElement& x);

}  // namespace thhcheck::permspec
