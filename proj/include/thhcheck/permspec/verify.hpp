#pragma once

#include <cstdint>

#include "thhcheck/report.hpp"

namespace thhcheck::permspec {

/// For every f in the permutations of n_0 + n_1 (or `cap` seeded samples
/// when there are more): lower = tau_* upper in the sphere model, with
/// tau_* taken from the diagram action, and the degree-1 last-face images
/// agree with upper/lower. Fails if tau_(n_0, n_1) is not the identity and
/// no f has upper != lower. details.witness holds the first such f.
Report verify_counterexample(int n0, int n1, std::uint64_t cap, std::uint64_t seed);

/// verify_counterexample for every (n_0, n_1) with n_0 + n_1 <= max_total.
Report verify_counterexample_sweep(int max_total, std::uint64_t cap, std::uint64_t seed);

/// For 1 <= l <= max_l, tuples with entries <= max_n and elements x (all
/// permutations up to `cap`, seeded samples above): the two last-face images
/// of x lie in one class of the colimit of the sphere model truncated at
/// `trunc`. pre_quotient_mismatches counts the instances where the images
/// differ as elements.
Report verify_colim_fix(int max_l, int max_n, int trunc, std::uint64_t cap, std::uint64_t seed);

/// Smash levels up to max_level of the built-in diagrams: unit laws, the
/// swap bijection, well-defined permutation action on classes, naturality of
/// the canonical map, and free(a) ^ free(b) at level n having
/// |Hom(a + b, n)| non-base classes. `value` is the count for
/// free(1) ^ free(1) at level 2.
Report verify_smash_skeleton(int max_level);

/// |Hom(m, n)| = n! / (n - m)! by enumeration for m <= n <= max_n.
Report verify_injection_counts(int max_n);

}  // namespace thhcheck::permspec
