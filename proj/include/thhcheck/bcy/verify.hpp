#pragma once

#include <cstdint>
#include <vector>

#include "thhcheck/bcy/bcy.hpp"
#include "thhcheck/report.hpp"

namespace thhcheck::bcy {

/// All (len)-tuples with entries 0..max_entry, last entry varying fastest.
std::vector<Tuple> all_tuples(int len, int max_entry);

/// The five simplicial identity families on objects, morphism tuples and
/// composite twists, for degrees <= max_k and entries/arities <= max_n;
/// also the cosimplicial identities on the generator maps themselves.
Report verify_simplicial_identities(int max_k, int max_n, TwistMode mode = TwistMode::Twisted);

/// t^(k+1) = id, d_0 t = d_k, d_i t = t d_(i-1), s_0 t = t^2 s_k,
/// s_i t = t s_(i-1) on objects, morphism tuples and composite twists.
Report verify_cyclic_identities(int max_k, int max_n, TwistMode mode = TwistMode::Twisted);

/// Factorization independence of the twist for all maps with degrees <=
/// max_k, tuples with entries <= max_n and all words at most
/// max_extra_length longer than the normal form. Explores the graph of
/// partial composites, so every word is covered without being listed; a
/// violation carries the two disagreeing words.
Report verify_twist_well_defined(int max_k, int max_n, int max_extra_length, TwistMode mode = TwistMode::Twisted);

/// The same statement by listing every factorization explicitly and
/// comparing its twist with the normal-form twist. Only feasible for small
/// bounds.
Report verify_twist_factorizations(int max_k, int max_n, int max_extra_length, TwistMode mode = TwistMode::Twisted);

/// Every twist maps each block onto a contiguous block, order-preservingly.
Report verify_twist_block_structure(int max_k, int max_n, TwistMode mode = TwistMode::Twisted);

struct FunctorSweep {
  int max_k = 4;
  int max_n = 2;
  // Instances with at most this many I-parts are enumerated; the others get
  // `samples` seeded draws.
  std::uint64_t ipart_cap = 4;
  int samples = 1;
  std::uint64_t seed = 0;
  TwistMode mode = TwistMode::Twisted;
};

/// mu_tw(m2 o m1) = mu_tw(m2) o mu_tw(m1) for every composable pair of Delta
/// parts with degrees <= max_k and source tuples with entries <= max_n. The
/// I-parts are injections into the pulled-back tuple padded by 0 or 1.
Report verify_mu_tw_functor(const FunctorSweep& sweep);

/// twist(g, T) o (|_| f) = (|_| g^* f) o twist(g, S) for every generator g
/// into degree <= max_k and every tuple f of injections S_i -> T_i with
/// S_i <= max_n and T_i <= max_arity.
Report verify_twist_naturality(int max_k, int max_n, int max_arity, TwistMode mode = TwistMode::Twisted);

/// Associativity and unit laws of groth_compose on seeded random triples.
Report verify_groth_category_laws(int max_k, int max_n, int triples, std::uint64_t seed);

}  // namespace thhcheck::bcy
