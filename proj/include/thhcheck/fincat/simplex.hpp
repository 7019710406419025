#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thhcheck/fincat/injection.hpp"

namespace thhcheck::fincat {

/// A morphism [k] -> [l] of the simplex category. Objects are 0-indexed:
/// [k] = {0, ..., k}.
class MonotoneMap {
 public:
  /// Validates weak monotonicity and that every value lies in 0..target.
  MonotoneMap(int target, ImageVector values);

  static MonotoneMap identity(int k);
  /// delta^i: [k-1] -> [k], the injection missing i.
  static MonotoneMap face(int i, int k);
  /// sigma^i: [k+1] -> [k], the surjection hitting i twice.
  static MonotoneMap degeneracy(int i, int k);

  int source() const noexcept { return static_cast<int>(values_.size()) - 1; }
  int target() const noexcept { return target_; }
  int operator()(int j) const { return values_[static_cast<std::size_t>(j)]; }
  std::span<const int> values() const noexcept { return {values_.data(), values_.size()}; }

  bool is_identity() const noexcept;
  bool is_injective() const noexcept;
  bool is_surjective() const noexcept;

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) noexcept {
    return a.target_ == b.target_ && a.values_ == b.values_;
  }
  friend bool operator<(const MonotoneMap& a, const MonotoneMap& b) noexcept;

  // Injective on maps with source + target <= 61.
  std::uint64_t key() const noexcept;

  std::string to_string() const;

 private:
  struct Unchecked {};
  MonotoneMap(Unchecked, int target, ImageVector values) noexcept : target_(target), values_(std::move(values)) {}

  int target_ = 0;
  ImageVector values_{0};

  friend MonotoneMap compose(const MonotoneMap& beta, const MonotoneMap& alpha);
};

/// beta o alpha. Throws CompositionError unless alpha.target() == beta.source().
MonotoneMap compose(const MonotoneMap& beta, const MonotoneMap& alpha);

/// All monotone maps [k] -> [l], lexicographic in their value sequences.
std::vector<MonotoneMap> enumerate_monotone_maps(int k, int l);

/// A face delta^i or degeneracy sigma^i together with its target degree.
struct Generator {
  enum class Kind : std::uint8_t { Face, Degeneracy };

  Kind kind;
  int index;
  int target;

  static Generator face(int i, int k) { return {Kind::Face, i, k}; }
  static Generator degeneracy(int i, int k) { return {Kind::Degeneracy, i, k}; }

  int source() const noexcept { return kind == Kind::Face ? target - 1 : target + 1; }
  bool is_face() const noexcept { return kind == Kind::Face; }
  // delta^k: [k-1] -> [k]; acts on tuples as the last face d_k.
  bool is_last_face() const noexcept { return kind == Kind::Face && index == target; }
  MonotoneMap map() const;
  std::string to_string() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

bool operator<(const Generator& a, const Generator& b) noexcept;

/// A composable string of generators, written in composition order:
/// letters().front() is applied last. The empty word is the identity of
/// `source()`.
class SimplicialWord {
 public:
  explicit SimplicialWord(int source) : source_(source) {}
  /// Throws CompositionError if adjacent arities do not chain.
  SimplicialWord(int source, std::vector<Generator> letters);

  int source() const noexcept { return source_; }
  int target() const noexcept { return letters_.empty() ? source_ : letters_.front().target; }
  std::size_t length() const noexcept { return letters_.size(); }
  const std::vector<Generator>& letters() const noexcept { return letters_; }

  MonotoneMap evaluate() const;
  std::string to_string() const;

  friend bool operator==(const SimplicialWord&, const SimplicialWord&) = default;

 private:
  int source_;
  std::vector<Generator> letters_;
};

/// Epi-mono factorization alpha = delta^{i_1} ... delta^{i_s} sigma^{j_1} ... sigma^{j_t}
/// with i_1 > ... > i_s and j_1 < ... < j_t.
struct NormalForm {
  int source = 0;
  int target = 0;
  std::vector<int> faces;         // strictly decreasing
  std::vector<int> degeneracies;  // strictly increasing

  SimplicialWord word() const;
  MonotoneMap evaluate() const { return word().evaluate(); }
  std::size_t length() const noexcept { return faces.size() + degeneracies.size(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const MonotoneMap& alpha);

/// Every word of length at most |normal form| + max_extra_length that
/// evaluates to alpha; ordered by length, then lexicographically by letters.
std::vector<SimplicialWord> all_factorizations(const MonotoneMap& alpha, int max_extra_length);

}  // namespace thhcheck::fincat
