#include "thhcheck/fincat/simplex.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <tuple>

#include "thhcheck/error.hpp"

namespace thhcheck::fincat {

MonotoneMap::MonotoneMap(int target, ImageVector values) : target_(target), values_(std::move(values)) {
  if (values_.empty()) throw ArityError("a monotone map needs a non-empty source [k], k >= 0");
  if (target < 0) throw ArityError("simplex target degree must be non-negative");
  int prev = 0;
  for (int v : values_) {
    if (v < 0 || v > target) {
      throw ArityError("value " + std::to_string(v) + " outside [" + std::to_string(target) + "]");
    }
    if (v < prev) throw ArityError("values are not weakly increasing");
    prev = v;
  }
}

MonotoneMap MonotoneMap::identity(int k) {
  if (k < 0) throw ArityError("simplex degree must be non-negative");
  ImageVector values(static_cast<std::size_t>(k + 1));
  for (int j = 0; j <= k; ++j) values[static_cast<std::size_t>(j)] = j;
  return {Unchecked{}, k, std::move(values)};
}

MonotoneMap MonotoneMap::face(int i, int k) {
  if (k < 1 || i < 0 || i > k) {
    throw IndexError("face delta^" + std::to_string(i) + " into [" + std::to_string(k) + "] does not exist");
  }
  ImageVector values(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) values[static_cast<std::size_t>(j)] = j < i ? j : j + 1;
  return {Unchecked{}, k, std::move(values)};
}

MonotoneMap MonotoneMap::degeneracy(int i, int k) {
  if (k < 0 || i < 0 || i > k) {
    throw IndexError("degeneracy sigma^" + std::to_string(i) + " onto [" + std::to_string(k) + "] does not exist");
  }
  ImageVector values(static_cast<std::size_t>(k + 2));
  for (int j = 0; j <= k + 1; ++j) values[static_cast<std::size_t>(j)] = j <= i ? j : j - 1;
  return {Unchecked{}, k, std::move(values)};
}

bool MonotoneMap::is_identity() const noexcept {
  if (source() != target_) return false;
  for (int j = 0; j <= target_; ++j) {
    if (values_[static_cast<std::size_t>(j)] != j) return false;
  }
  return true;
}

bool MonotoneMap::is_injective() const noexcept {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool MonotoneMap::is_surjective() const noexcept {
  int distinct = 1;
  for (std::size_t j = 1; j < values_.size(); ++j) {
    if (values_[j] != values_[j - 1]) ++distinct;
  }
  return values_.front() == 0 && distinct == target_ + 1;
}

bool operator<(const MonotoneMap& a, const MonotoneMap& b) noexcept {
  return std::forward_as_tuple(a.source(), a.target_) < std::forward_as_tuple(b.source(), b.target_) ||
         (a.source() == b.source() && a.target_ == b.target_ &&
          std::lexicographical_compare(a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end()));
}

std::uint64_t MonotoneMap::key() const noexcept {
  // A sentinel 1, then for each value its increment as zeros followed by a
  // one, then the zeros up to the target.
  std::uint64_t key = 1;
  int prev = 0;
  for (int v : values_) {
    key = (key << (v - prev) << 1) | 1;
    prev = v;
  }
  return key << (target_ - prev);
}

std::string MonotoneMap::to_string() const {
  std::ostringstream os;
  os << '[' << source() << "]->[" << target_ << "] (";
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (j) os << ',';
    os << values_[j];
  }
  os << ')';
  return os.str();
}

MonotoneMap compose(const MonotoneMap& beta, const MonotoneMap& alpha) {
  if (alpha.target() != beta.source()) {
    throw CompositionError("cannot compose " + beta.to_string() + " after " + alpha.to_string());
  }
  ImageVector values(alpha.values_.size());
  for (std::size_t j = 0; j < values.size(); ++j) values[j] = beta(alpha.values_[j]);
  return {MonotoneMap::Unchecked{}, beta.target(), std::move(values)};
}

std::vector<MonotoneMap> enumerate_monotone_maps(int k, int l) {
  std::vector<MonotoneMap> out;
  if (k < 0 || l < 0) return out;
  ImageVector values(static_cast<std::size_t>(k + 1), 0);
  while (true) {
    out.emplace_back(l, values);
    // Next weakly increasing sequence in lexicographic order.
    int pos = k;
    while (pos >= 0 && values[static_cast<std::size_t>(pos)] == l) --pos;
    if (pos < 0) break;
    const int v = values[static_cast<std::size_t>(pos)] + 1;
    for (int j = pos; j <= k; ++j) values[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

MonotoneMap Generator::map() const {
  return kind == Kind::Face ? MonotoneMap::face(index, target) : MonotoneMap::degeneracy(index, target);
}

std::string Generator::to_string() const {
  return (kind == Kind::Face ? "d^" : "s^") + std::to_string(index) + "@" + std::to_string(target);
}

bool operator<(const Generator& a, const Generator& b) noexcept {
  return std::tie(a.kind, a.index, a.target) < std::tie(b.kind, b.index, b.target);
}

SimplicialWord::SimplicialWord(int source, std::vector<Generator> letters)
    : source_(source), letters_(std::move(letters)) {
  int degree = source_;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    if (it->source() != degree) {
      throw CompositionError("generator " + it->to_string() + " does not accept degree " + std::to_string(degree));
    }
    if (it->index < 0 || it->index > it->target || (it->is_face() && it->target < 1)) {
      throw IndexError("generator " + it->to_string() + " does not exist");
    }
    degree = it->target;
  }
}

MonotoneMap SimplicialWord::evaluate() const {
  MonotoneMap out = MonotoneMap::identity(source_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out = compose(it->map(), out);
  return out;
}

std::string SimplicialWord::to_string() const {
  if (letters_.empty()) return "id[" + std::to_string(source_) + "]";
  std::string out;
  for (const auto& g : letters_) {
    if (!out.empty()) out += ' ';
    out += g.to_string();
  }
  return out;
}

SimplicialWord NormalForm::word() const {
  std::vector<Generator> letters;
  letters.reserve(length());
  int degree = target;
  for (int i : faces) letters.push_back(Generator::face(i, degree--));
  for (int j : degeneracies) letters.push_back(Generator::degeneracy(j, degree++));
  return SimplicialWord(source, std::move(letters));
}

NormalForm normal_form(const MonotoneMap& alpha) {
  NormalForm nf;
  nf.source = alpha.source();
  nf.target = alpha.target();
  const auto values = alpha.values();
  for (int j = 0; j < alpha.source(); ++j) {
    if (values[static_cast<std::size_t>(j)] == values[static_cast<std::size_t>(j + 1)]) {
      nf.degeneracies.push_back(j);
    }
  }
  std::vector<bool> hit(static_cast<std::size_t>(alpha.target() + 1), false);
  for (int v : values) hit[static_cast<std::size_t>(v)] = true;
  for (int i = alpha.target(); i >= 0; --i) {
    if (!hit[static_cast<std::size_t>(i)]) nf.faces.push_back(i);
  }
  return nf;
}

namespace {

// Depth-first search for words of exactly `length` letters, built from the
// target side. `partial` is the composite of the letters chosen so far.
class FactorizationSearch {
 public:
  FactorizationSearch(const MonotoneMap& alpha, std::vector<SimplicialWord>& out) : alpha_(alpha), out_(out) {}

  void run(int length) {
    length_ = length;
    letters_.clear();
    visit(MonotoneMap::identity(alpha_.target()));
  }

 private:
  bool can_reach(const MonotoneMap& partial, int remaining) const {
    const int degree = partial.source();
    const int gap = std::abs(degree - alpha_.source());
    if (gap > remaining || (remaining - gap) % 2 != 0) return false;
    // alpha has to factor through partial.
    const auto image = partial.values();
    for (int v : alpha_.values()) {
      if (!std::binary_search(image.begin(), image.end(), v)) return false;
    }
    return true;
  }

  void visit(const MonotoneMap& partial) {
    const int depth = static_cast<int>(letters_.size());
    if (depth == length_) {
      if (partial == alpha_) out_.emplace_back(alpha_.source(), letters_);
      return;
    }
    const int degree = partial.source();
    auto extend = [&](Generator g) {
      MonotoneMap next = compose(partial, g.map());
      if (!can_reach(next, length_ - depth - 1)) return;
      letters_.push_back(g);
      visit(next);
      letters_.pop_back();
    };
    if (degree >= 1) {
      for (int i = 0; i <= degree; ++i) extend(Generator::face(i, degree));
    }
    for (int i = 0; i <= degree; ++i) extend(Generator::degeneracy(i, degree));
  }

  const MonotoneMap& alpha_;
  std::vector<SimplicialWord>& out_;
  std::vector<Generator> letters_;
  int length_ = 0;
};

}  // namespace

std::vector<SimplicialWord> all_factorizations(const MonotoneMap& alpha, int max_extra_length) {
  if (max_extra_length < 0) throw ArityError("max_extra_length must be non-negative");
  std::vector<SimplicialWord> out;
  const auto shortest = static_cast<int>(normal_form(alpha).length());
  FactorizationSearch search(alpha, out);
  for (int length = shortest; length <= shortest + max_extra_length; ++length) search.run(length);
  return out;
}

}  // namespace thhcheck::fincat
