#include "thhcheck/bcy/bcy.hpp"

#include <numeric>
#include <sstream>

#include "thhcheck/error.hpp"

namespace thhcheck::bcy {

using fincat::concat;
using fincat::concat_all;

namespace {

void require_length(std::size_t size, int degree, const char* what) {
  if (static_cast<int>(size) != degree + 1) {
    throw ArityError(std::string(what) + ": expected " + std::to_string(degree + 1) + " entries, got " +
                     std::to_string(size));
  }
}

void require_index(int i, int k, const char* what) {
  if (i < 0 || i > k) {
    throw IndexError(std::string(what) + " index " + std::to_string(i) + " outside 0.." + std::to_string(k));
  }
}

// Faces and degeneracies on a sequence of blocks; `merge` joins two
// neighbouring blocks and `unit` makes the empty block.
template <class Seq, class Merge>
Seq face_on(int i, const Seq& in, Merge merge) {
  const int k = static_cast<int>(in.size()) - 1;
  if (k < 1) throw IndexError("no faces on degree 0");
  require_index(i, k, "face");
  Seq out;
  out.reserve(in.size() - 1);
  if (i == k) {
    out.push_back(merge(in[static_cast<std::size_t>(k)], in[0]));
    for (int j = 1; j < k; ++j) out.push_back(in[static_cast<std::size_t>(j)]);
    return out;
  }
  for (int j = 0; j < k; ++j) {
    if (j < i) {
      out.push_back(in[static_cast<std::size_t>(j)]);
    } else if (j == i) {
      out.push_back(merge(in[static_cast<std::size_t>(i)], in[static_cast<std::size_t>(i + 1)]));
    } else {
      out.push_back(in[static_cast<std::size_t>(j + 1)]);
    }
  }
  return out;
}

template <class Seq, class Unit>
Seq degeneracy_on(int i, const Seq& in, Unit unit) {
  const int k = static_cast<int>(in.size()) - 1;
  require_index(i, k, "degeneracy");
  Seq out(in.begin(), in.end());
  out.insert(out.begin() + i + 1, unit());
  return out;
}

template <class Seq>
Seq rotate_right(const Seq& in) {
  Seq out;
  out.reserve(in.size());
  out.push_back(in.back());
  for (std::size_t j = 0; j + 1 < in.size(); ++j) out.push_back(in[j]);
  return out;
}

Tuple apply_generator(const Generator& g, std::span<const int> tuple) {
  require_length(tuple.size(), g.target, "generator arity");
  const int l = g.target;
  Tuple out;
  if (g.is_face()) {
    const int i = g.index;
    if (i == l) {
      out.push_back(tuple[static_cast<std::size_t>(l)] + tuple[0]);
      for (int j = 1; j < l; ++j) out.push_back(tuple[static_cast<std::size_t>(j)]);
    } else {
      for (int j = 0; j < l; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        out.push_back(j < i ? tuple[uj] : j == i ? tuple[uj] + tuple[uj + 1] : tuple[uj + 1]);
      }
    }
  } else {
    out.assign(tuple.begin(), tuple.end());
    out.insert(out.begin() + g.index + 1, 0);
  }
  return out;
}

int sum(std::span<const int> tuple) { return std::accumulate(tuple.begin(), tuple.end(), 0); }

}  // namespace

BcyObj::BcyObj(Tuple t) : tuple(std::move(t)) {
  if (tuple.empty()) throw ArityError("an object needs at least one entry");
  for (int n : tuple) {
    if (n < 0) throw ArityError("tuple entries must be non-negative");
  }
}

int BcyObj::total() const noexcept { return sum(as_span(tuple)); }

std::string BcyObj::to_string() const {
  std::ostringstream os;
  os << '[' << degree() << "];(";
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    if (j) os << ',';
    os << tuple[j];
  }
  os << ')';
  return os.str();
}

BcyObj face_on_tuple(int i, const BcyObj& obj) {
  return BcyObj(face_on(i, obj.tuple, [](int a, int b) { return a + b; }));
}

BcyObj degeneracy_on_tuple(int i, const BcyObj& obj) {
  return BcyObj(degeneracy_on(i, obj.tuple, [] { return 0; }));
}

BcyObj cyclic_on_tuple(const BcyObj& obj) { return BcyObj(rotate_right(obj.tuple)); }

MorTuple face_on_morphisms(int i, std::span<const Injection> maps) {
  const MorTuple in(maps.begin(), maps.end());
  return face_on(i, in, [](const Injection& f, const Injection& g) { return concat(f, g); });
}

MorTuple degeneracy_on_morphisms(int i, std::span<const Injection> maps) {
  const MorTuple in(maps.begin(), maps.end());
  if (in.empty()) throw ArityError("empty morphism tuple");
  return degeneracy_on(i, in, [] { return Injection(); });
}

MorTuple cyclic_on_morphisms(std::span<const Injection> maps) {
  if (maps.empty()) throw ArityError("empty morphism tuple");
  return rotate_right(MorTuple(maps.begin(), maps.end()));
}

BlockPlan::BlockPlan(int degree) : input_degree_(degree) {
  if (degree < 0) throw ArityError("plan degree must be non-negative");
  offsets_.push_back(0);
  for (int j = 0; j <= degree; ++j) {
    blocks_.push_back(j);
    offsets_.push_back(j + 1);
  }
}

BlockPlan BlockPlan::of_generator(const Generator& g) {
  const int l = g.target;
  require_index(g.index, l, g.is_face() ? "face" : "degeneracy");
  if (g.is_face() && l < 1) throw IndexError("no faces into [0]");
  BlockPlan plan;
  plan.input_degree_ = l;
  plan.offsets_.push_back(0);
  auto close = [&plan] { plan.offsets_.push_back(static_cast<int>(plan.blocks_.size())); };
  const int i = g.index;
  if (g.is_face()) {
    if (i == l) {
      plan.blocks_.push_back(l);
      plan.blocks_.push_back(0);
      close();
      for (int j = 1; j < l; ++j) {
        plan.blocks_.push_back(j);
        close();
      }
    } else {
      for (int j = 0; j < l; ++j) {
        if (j == i) {
          plan.blocks_.push_back(i);
          plan.blocks_.push_back(i + 1);
        } else {
          plan.blocks_.push_back(j < i ? j : j + 1);
        }
        close();
      }
    }
  } else {
    for (int j = 0; j <= l + 1; ++j) {
      if (j != i + 1) plan.blocks_.push_back(j <= i ? j : j - 1);
      close();
    }
  }
  return plan;
}

BlockPlan BlockPlan::then(const BlockPlan& next) const {
  if (next.input_degree_ != output_degree()) {
    throw CompositionError("block plans do not chain: degree " + std::to_string(output_degree()) + " vs " +
                           std::to_string(next.input_degree_));
  }
  BlockPlan out;
  out.input_degree_ = input_degree_;
  out.offsets_.push_back(0);
  for (int j = 0; j <= next.output_degree(); ++j) {
    for (int b : next.blocks_of(j)) {
      for (int a : blocks_of(b)) out.blocks_.push_back(a);
    }
    out.offsets_.push_back(static_cast<int>(out.blocks_.size()));
  }
  return out;
}

Tuple BlockPlan::apply(std::span<const int> tuple) const {
  require_length(tuple.size(), input_degree_, "block plan arity");
  Tuple out(static_cast<std::size_t>(output_degree() + 1), 0);
  for (int j = 0; j <= output_degree(); ++j) {
    for (int b : blocks_of(j)) out[static_cast<std::size_t>(j)] += tuple[static_cast<std::size_t>(b)];
  }
  return out;
}

MorTuple BlockPlan::apply(std::span<const Injection> maps) const {
  require_length(maps.size(), input_degree_, "block plan arity");
  MorTuple out;
  out.reserve(static_cast<std::size_t>(output_degree() + 1));
  for (int j = 0; j <= output_degree(); ++j) out.push_back(fincat::concat_indexed(maps, blocks_of(j)));
  return out;
}

BlockPlan block_plan(const MonotoneMap& alpha) {
  BlockPlan plan(alpha.target());
  const SimplicialWord word = fincat::normal_form(alpha).word();
  for (const auto& g : word.letters()) plan = plan.then(BlockPlan::of_generator(g));
  return plan;
}

SimplicialOperator::SimplicialOperator(MonotoneMap alpha)
    : map(std::move(alpha)), word(fincat::normal_form(map).word()), plan(map.target()) {
  for (const auto& g : word.letters()) plan = plan.then(BlockPlan::of_generator(g));
}

BcyObj act_on_object(const MonotoneMap& alpha, const BcyObj& obj) {
  require_length(obj.tuple.size(), alpha.target(), "object degree");
  return BcyObj(block_plan(alpha).apply(as_span(obj.tuple)));
}

MorTuple simplicial_action_on_morphisms(const MonotoneMap& alpha, std::span<const Injection> maps) {
  return block_plan(alpha).apply(maps);
}

Permutation generator_twist(const Generator& g, std::span<const int> tuple, TwistMode mode) {
  require_length(tuple.size(), g.target, "generator arity");
  const int total = sum(tuple);
  if (mode == TwistMode::Untwisted || !g.is_last_face()) return Permutation::identity(total);
  const int last = tuple[static_cast<std::size_t>(g.target)];
  return fincat::block_permutation(total - last, last);
}

Permutation word_twist(const SimplicialWord& word, std::span<const int> tuple, TwistMode mode) {
  require_length(tuple.size(), word.target(), "word arity");
  Permutation perm = Permutation::identity(sum(tuple));
  Tuple cur(tuple.begin(), tuple.end());
  for (const auto& g : word.letters()) {
    if (mode == TwistMode::Twisted && g.is_last_face()) perm = compose(generator_twist(g, as_span(cur), mode), perm);
    cur = apply_generator(g, as_span(cur));
  }
  return perm;
}

Permutation twist(const MonotoneMap& alpha, std::span<const int> tuple, TwistMode mode) {
  return word_twist(fincat::normal_form(alpha).word(), tuple, mode);
}

Permutation twist(const SimplicialOperator& op, std::span<const int> tuple, TwistMode mode) {
  return word_twist(op.word, tuple, mode);
}

Permutation cyclic_twist(std::span<const int> tuple) {
  if (tuple.empty()) throw ArityError("empty tuple");
  const int last = tuple.back();
  return fincat::block_permutation(sum(tuple) - last, last);
}

BcyMor::BcyMor(BcyObj src, MonotoneMap d, MorTuple parts)
    : source(std::move(src)), delta(std::move(d)), i_part(std::move(parts)) {
  if (delta.target() != source.degree()) {
    throw ArityError("simplicial part " + delta.to_string() + " does not start at " + source.to_string());
  }
  require_length(i_part.size(), delta.source(), "injection part");
  const Tuple pulled = block_plan(delta).apply(as_span(source.tuple));
  for (std::size_t j = 0; j < i_part.size(); ++j) {
    if (i_part[j].source() != pulled[j]) {
      throw ArityError("injection " + std::to_string(j) + " has source " + std::to_string(i_part[j].source()) +
                       ", expected " + std::to_string(pulled[j]));
    }
  }
}

BcyMor BcyMor::identity(const BcyObj& obj) { return pure(obj, MonotoneMap::identity(obj.degree())); }

BcyMor BcyMor::pure(const BcyObj& source, const MonotoneMap& alpha) {
  const Tuple pulled = block_plan(alpha).apply(as_span(source.tuple));
  MorTuple parts;
  parts.reserve(pulled.size());
  for (int n : pulled) parts.push_back(Injection::identity(n));
  return BcyMor(source, alpha, std::move(parts));
}

BcyObj BcyMor::target() const {
  Tuple t;
  for (const auto& f : i_part) t.push_back(f.target());
  return BcyObj(std::move(t));
}

BcyMor groth_compose(const BcyMor& second, const BcyMor& first) {
  if (first.target() != second.source) {
    throw CompositionError("cannot compose: " + first.target().to_string() + " vs " + second.source.to_string());
  }
  return BcyMor(first.source, compose(first.delta, second.delta),
                composite_i_part(block_plan(second.delta), as_span(first.i_part), as_span(second.i_part)));
}

MuTwObject mu_tw_object(const BcyObj& obj) { return {obj.degree(), obj.total()}; }

MuTwMorphism compose(const MuTwMorphism& second, const MuTwMorphism& first) {
  return {compose(first.delta, second.delta), compose(second.arrow, first.arrow)};
}

MuTwMorphism mu_tw_morphism(const BcyMor& m, TwistMode mode) {
  const Permutation tw = twist(m.delta, as_span(m.source.tuple), mode);
  return {m.delta, compose(concat_all(as_span(m.i_part)), tw.as_injection())};
}

MorTuple composite_i_part(const BlockPlan& second_plan, std::span<const Injection> first_i,
                          std::span<const Injection> second_i) {
  MorTuple parts = second_plan.apply(first_i);
  require_length(second_i.size(), second_plan.output_degree(), "second injection part");
  for (std::size_t j = 0; j < parts.size(); ++j) parts[j] = compose(second_i[j], parts[j]);
  return parts;
}

Injection mu_tw_arrow(const SimplicialOperator& op, std::span<const int> source, std::span<const Injection> i_part,
                      TwistMode mode) {
  return mu_tw_arrow(twist(op, source, mode), i_part);
}

Injection mu_tw_arrow(const Permutation& source_twist, std::span<const Injection> i_part) {
  return compose(concat_all(i_part), source_twist.as_injection());
}

}  // namespace thhcheck::bcy
