#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "thhcheck/fincat/injection.hpp"
#include "thhcheck/fincat/simplex.hpp"

namespace thhcheck::bcy {

using fincat::Generator;
using fincat::Injection;
using fincat::MonotoneMap;
using fincat::NormalForm;
using fincat::Permutation;
using fincat::SimplicialWord;

using Tuple = boost::container::small_vector<int, 8>;

// One injection per simplex position.
using MorTuple = boost::container::small_vector<Injection, 6>;

inline std::span<const int> as_span(const Tuple& t) noexcept { return {t.data(), t.size()}; }
inline std::span<const Injection> as_span(const MorTuple& t) noexcept { return {t.data(), t.size()}; }

/// An object ([k]; n_0, ..., n_k) of the Grothendieck construction of the
/// cyclic bar construction on the injection category.
struct BcyObj {
  Tuple tuple;

  BcyObj() : tuple{0} {}
  explicit BcyObj(Tuple t);
  BcyObj(std::initializer_list<int> entries) : BcyObj(Tuple(entries)) {}

  int degree() const noexcept { return static_cast<int>(tuple.size()) - 1; }
  int total() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BcyObj&, const BcyObj&) = default;
};

/// d_i: merges n_i and n_{i+1} for i < k; the last face d_k gives
/// (n_k |_| n_0, n_1, ..., n_{k-1}).
BcyObj face_on_tuple(int i, const BcyObj& obj);
/// s_i: inserts 0 after position i.
BcyObj degeneracy_on_tuple(int i, const BcyObj& obj);
/// t_k: (n_0, ..., n_k) |-> (n_k, n_0, ..., n_{k-1}).
BcyObj cyclic_on_tuple(const BcyObj& obj);

/// The same operators on tuples of injections: faces concatenate neighbours
/// (the last face concatenates f_k |_| f_0), degeneracies insert id_0.
MorTuple face_on_morphisms(int i, std::span<const Injection> maps);
MorTuple degeneracy_on_morphisms(int i, std::span<const Injection> maps);
MorTuple cyclic_on_morphisms(std::span<const Injection> maps);

/// How alpha^* regroups blocks: output position j of alpha^* is the
/// concatenation of the input blocks listed in `blocks_of(j)`, in order.
class BlockPlan {
 public:
  /// Identity plan on (degree + 1)-tuples.
  explicit BlockPlan(int degree);
  static BlockPlan of_generator(const Generator& g);

  int input_degree() const noexcept { return input_degree_; }
  int output_degree() const noexcept { return static_cast<int>(offsets_.size()) - 2; }
  std::span<const int> blocks_of(int j) const noexcept {
    return {
        blocks_.data() + offsets_[static_cast<std::size_t>(j)],
        static_cast<std::size_t>(offsets_[static_cast<std::size_t>(j) + 1] - offsets_[static_cast<std::size_t>(j)])};
  }

  /// The plan of (this operator followed by `next`), i.e. next^* o this^*.
  BlockPlan then(const BlockPlan& next) const;

  Tuple apply(std::span<const int> tuple) const;
  MorTuple apply(std::span<const Injection> maps) const;

  friend bool operator==(const BlockPlan&, const BlockPlan&) = default;

 private:
  BlockPlan() = default;

  int input_degree_ = 0;
  boost::container::small_vector<int, 16> blocks_;
  boost::container::small_vector<int, 16> offsets_;
};

/// The plan of alpha^*, built by composing generator plans along the normal form.
BlockPlan block_plan(const MonotoneMap& alpha);

/// A monotone map with its normal form and block plan precomputed, for
/// sweeps that apply the same operator many times.
struct SimplicialOperator {
  explicit SimplicialOperator(MonotoneMap alpha);

  MonotoneMap map;
  SimplicialWord word;
  BlockPlan plan;
};

/// alpha^* on objects and on tuples of injections.
BcyObj act_on_object(const MonotoneMap& alpha, const BcyObj& obj);
MorTuple simplicial_action_on_morphisms(const MonotoneMap& alpha, std::span<const Injection> maps);

/// Twisted: the last face carries tau_(n_0 |_| ... |_| n_{k-1}, n_k).
/// Untwisted: every generator carries the identity (the original, flawed
/// comparison; used as a negative control).
enum class TwistMode : std::uint8_t { Twisted, Untwisted };

/// The component at `tuple` of the transformation attached to a generator:
/// a permutation from the concatenation of `tuple` to the concatenation of g^* tuple.
Permutation generator_twist(const Generator& g, std::span<const int> tuple, TwistMode mode = TwistMode::Twisted);

/// Composes generator twists along a word: the component of (beta o gamma)
/// at T is gamma-bar at beta^* T composed with beta-bar at T.
Permutation word_twist(const SimplicialWord& word, std::span<const int> tuple, TwistMode mode = TwistMode::Twisted);

/// The twist of an arbitrary monotone map, defined through its normal form.
Permutation twist(const MonotoneMap& alpha, std::span<const int> tuple, TwistMode mode = TwistMode::Twisted);
Permutation twist(const SimplicialOperator& op, std::span<const int> tuple, TwistMode mode = TwistMode::Twisted);

/// Twist attached to the cyclic operator t_k, tau_(n_0 |_| ... |_| n_{k-1}, n_k).
Permutation cyclic_twist(std::span<const int> tuple);

/// A morphism (alpha; f) from `source` (degree alpha.target()) to the object
/// of degree alpha.source() formed by the codomains of `i_part`. Each f_j
/// maps (alpha^* source)_j into the target tuple.
struct BcyMor {
  BcyObj source;
  MonotoneMap delta;
  MorTuple i_part;

  /// Throws ArityError if delta or i_part do not fit `source`.
  BcyMor(BcyObj source, MonotoneMap delta, MorTuple i_part);
  static BcyMor identity(const BcyObj& obj);
  /// (alpha; id): the pure simplicial morphism out of `source`.
  static BcyMor pure(const BcyObj& source, const MonotoneMap& alpha);

  BcyObj target() const;

  friend bool operator==(const BcyMor&, const BcyMor&) = default;
};

/// second o first. Throws CompositionError unless first.target() == second.source.
BcyMor groth_compose(const BcyMor& second, const BcyMor& first);

struct MuTwObject {
  int degree;
  int total;
  friend bool operator==(const MuTwObject&, const MuTwObject&) = default;
};

/// ([k]; n_0, ..., n_k) |-> ([k], n_0 |_| ... |_| n_k).
MuTwObject mu_tw_object(const BcyObj& obj);

/// A morphism of Delta^op x I: the simplicial part is stored as the Delta map.
struct MuTwMorphism {
  MonotoneMap delta;
  Injection arrow;
  friend bool operator==(const MuTwMorphism&, const MuTwMorphism&) = default;
};

/// second o first in Delta^op x I.
MuTwMorphism compose(const MuTwMorphism& second, const MuTwMorphism& first);

/// (alpha, (|_| f) o twist(alpha, source tuple)).
MuTwMorphism mu_tw_morphism(const BcyMor& m, TwistMode mode = TwistMode::Twisted);

// Unvalidated kernels behind groth_compose and mu_tw_morphism, for sweeps.

/// The I-part of second o first: second_i o (second's delta)^* first_i.
MorTuple composite_i_part(const BlockPlan& second_plan, std::span<const Injection> first_i,
                          std::span<const Injection> second_i);
/// The I-part of mu_tw applied to (op; i_part) out of `source`.
Injection mu_tw_arrow(const SimplicialOperator& op, std::span<const int> source, std::span<const Injection> i_part,
                      TwistMode mode = TwistMode::Twisted);
/// The same with the twist at the source already computed.
Injection mu_tw_arrow(const Permutation& source_twist, std::span<const Injection> i_part);

}  // namespace thhcheck::bcy
